//! Gindikin–Karpelevich factors as exact zeta-quotient products.
//!
//! For a Weyl element `w` and a character family `χ_s`,
//! `C_w(χ_s) = Π ζ(⟨χ_s, α∨⟩) / ζ(⟨χ_s, α∨⟩ + 1)` over the positive roots `α`
//! with `w·α < 0`. Arguments are kept as [`AffLin`] values; nothing here is
//! evaluated numerically.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::characters::{chi_family, AffLin, AffineWeight, Convention};
use crate::rootdata::{CosetTree, NodeSet, RootDatum, WeylElement};
use crate::{Error, Q};

/// `Π ζ(num_i) / Π ζ(den_j)`, arguments sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZetaProduct {
    pub numerator: Vec<AffLin>,
    pub denominator: Vec<AffLin>,
    pub reduced: bool,
}

impl ZetaProduct {
    pub fn one() -> Self {
        ZetaProduct { numerator: Vec::new(), denominator: Vec::new(), reduced: true }
    }

    pub fn from_parts(mut numerator: Vec<AffLin>, mut denominator: Vec<AffLin>) -> Self {
        numerator.sort();
        denominator.sort();
        ZetaProduct { numerator, denominator, reduced: false }
    }

    /// Cancels common factors between numerator and denominator.
    pub fn reduce(&self) -> ZetaProduct {
        let (numerator, denominator) = cancel(&self.numerator, &self.denominator);
        ZetaProduct { numerator, denominator, reduced: true }
    }

    pub fn mul(&self, other: &ZetaProduct) -> ZetaProduct {
        let mut n = self.numerator.clone();
        n.extend_from_slice(&other.numerator);
        let mut d = self.denominator.clone();
        d.extend_from_slice(&other.denominator);
        ZetaProduct::from_parts(n, d)
    }

    pub fn inverse(&self) -> ZetaProduct {
        ZetaProduct {
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
            reduced: self.reduced,
        }
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_empty() && self.denominator.is_empty()
    }

    /// Renders as `\frac{\zeta(16s-3)\zeta(8s)}{\zeta(16s+4)}`, or `1`.
    pub fn latex(&self) -> String {
        let side = |v: &[AffLin]| {
            let mut s = String::new();
            for a in v {
                let _ = write!(s, "\\zeta({})", a);
            }
            s
        };
        match (self.numerator.is_empty(), self.denominator.is_empty()) {
            (true, true) => String::from("1"),
            (false, true) => side(&self.numerator),
            (n, false) => {
                let top = if n { String::from("1") } else { side(&self.numerator) };
                alloc::format!("\\frac{{{}}}{{{}}}", top, side(&self.denominator))
            }
        }
    }

    /// Plain-text rendering such as `ζ(16s-3)ζ(8s)/(ζ(16s+4))`.
    pub fn plain(&self) -> String {
        let side = |v: &[AffLin]| {
            let mut s = String::new();
            for a in v {
                let _ = write!(s, "ζ({})", a);
            }
            s
        };
        match (self.numerator.is_empty(), self.denominator.is_empty()) {
            (true, true) => String::from("1"),
            (false, true) => side(&self.numerator),
            (n, false) => {
                let top = if n { String::from("1") } else { side(&self.numerator) };
                alloc::format!("{}/({})", top, side(&self.denominator))
            }
        }
    }
}

/// Multiset difference of two sorted lists, returning `(a ∖ b, b ∖ a)`.
pub(crate) fn cancel<T: Ord + Clone>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let mut ra = Vec::new();
    let mut rb = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                ra.push(a[i].clone());
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                rb.push(b[j].clone());
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    ra.extend_from_slice(&a[i..]);
    rb.extend_from_slice(&b[j..]);
    (ra, rb)
}

/// The unreduced factor of `w`, one quotient per inversion.
///
/// Walking the word from the right, the letter `j` applied to the current
/// image `μ = (suffix)·χ` contributes the pairing `μ_j`.
pub fn c_factor_unreduced(datum: &RootDatum, w: &WeylElement, chi: &AffineWeight) -> ZetaProduct {
    let mut mu = chi.coords();
    let mut num = Vec::with_capacity(w.length());
    for &l in w.word().iter().rev() {
        num.push(mu[l as usize]);
        datum.reflect(l as usize, &mut mu);
    }
    let den = num.iter().map(|a| a.shift(Q::from_integer(1))).collect();
    ZetaProduct::from_parts(num, den)
}

pub fn c_factor(datum: &RootDatum, w: &WeylElement, chi: &AffineWeight) -> ZetaProduct {
    c_factor_unreduced(datum, w, chi).reduce()
}

/// Checks `C_{w1 w2}(χ) = C_{w1}(w2·χ) C_{w2}(χ)` on unreduced multisets.
pub fn cocycle_check(
    datum: &RootDatum,
    w1: &WeylElement,
    w2: &WeylElement,
    chi: &AffineWeight,
) -> Result<bool, Error> {
    let w = datum.compose(w1, w2);
    if w.length() != w1.length() + w2.length() {
        return Err(Error::NotReduced);
    }
    let mut moved = chi.coords();
    datum.apply_word(w2.word(), &mut moved);
    let moved = AffineWeight {
        v: moved.iter().map(|x| x.a).collect(),
        u: moved.iter().map(|x| x.b).collect(),
        convention: chi.convention,
    };
    let lhs = c_factor_unreduced(datum, &w, chi);
    let rhs = c_factor_unreduced(datum, w1, &moved).mul(&c_factor_unreduced(datum, w2, chi));
    Ok(lhs == rhs)
}

/// A reduced factor attached to one coset representative.
#[derive(Clone, Debug)]
pub struct CosetFactor {
    /// Index of the node in the coset tree.
    pub node: usize,
    /// `w·χ` as affine coordinates in the weight basis.
    pub image: Vec<AffLin>,
    pub factor: ZetaProduct,
}

/// Depth-first walk over a coset tree, handing each node its image `w·χ`
/// and its unreduced numerator arguments (in inversion order).
pub fn walk_cosets<F>(datum: &RootDatum, tree: &CosetTree, chi: &AffineWeight, mut visit: F)
where
    F: FnMut(usize, &[AffLin], &[AffLin]),
{
    let mut children: Vec<Vec<u32>> = alloc::vec![Vec::new(); tree.len()];
    for (k, node) in tree.nodes.iter().enumerate().skip(1) {
        children[node.parent as usize].push(k as u32);
    }
    let mut image = chi.coords();
    let mut args: Vec<AffLin> = Vec::new();
    visit(0, &image, &args);
    // Stack of (node, next child position).
    let mut stack: Vec<(usize, usize)> = alloc::vec![(0, 0)];
    while let Some(top) = stack.last_mut() {
        let (node, pos) = *top;
        if pos < children[node].len() {
            top.1 += 1;
            let child = children[node][pos] as usize;
            let j = tree.nodes[child].letter as usize;
            args.push(image[j]);
            datum.reflect(j, &mut image);
            visit(child, &image, &args);
            stack.push((child, 0));
        } else {
            stack.pop();
            if node != 0 {
                let j = tree.nodes[node].letter as usize;
                datum.reflect(j, &mut image);
                args.pop();
            }
        }
    }
}

/// Reduced `C_w(χ)` for every coset representative of `W / W_levi`.
pub fn coset_factors(datum: &RootDatum, levi: NodeSet, chi: &AffineWeight) -> Vec<CosetFactor> {
    let tree = datum.coset_tree(levi);
    let mut out = Vec::with_capacity(tree.len());
    walk_cosets(datum, &tree, chi, |node, image, args| {
        let den: Vec<AffLin> = args.iter().map(|a| a.shift(Q::from_integer(1))).collect();
        out.push(CosetFactor {
            node,
            image: image.to_vec(),
            factor: ZetaProduct::from_parts(args.to_vec(), den).reduce(),
        });
    });
    out.sort_by_key(|c| c.node);
    out
}

/// A denominator argument that fails `q(s0) > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub word: WeylElement,
    pub argument: AffLin,
    pub value: Q,
}

/// Result of checking the denominator assumption at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorReport {
    pub parabolic: usize,
    pub s0: Q,
    pub cosets: usize,
    pub violations: Vec<Violation>,
}

/// Checks that every reduced denominator argument of every `C_w`,
/// `w ∈ W(G,P_i)`, exceeds one at `s0` (plus-half convention).
pub fn verify_denominator_assumption(datum: &RootDatum, i: usize, s0: Q) -> DenominatorReport {
    let chi = chi_family(datum, i, Convention::PlusHalf);
    let tree = datum.coset_tree(datum.maximal_levi(i));
    let one = Q::from_integer(1);
    let mut bad: Vec<(usize, AffLin, Q)> = Vec::new();
    walk_cosets(datum, &tree, &chi, |node, _, args| {
        let mut num = args.to_vec();
        num.sort();
        let mut den: Vec<AffLin> = num.iter().map(|a| a.shift(one)).collect();
        den.sort();
        let (_, den) = cancel(&num, &den);
        for q in den {
            let v = q.eval(s0);
            if v <= one {
                bad.push((node, q, v));
            }
        }
    });
    let violations = bad
        .into_iter()
        .map(|(node, argument, value)| Violation { word: datum.element(&tree.raw_word(node)), argument, value })
        .collect();
    DenominatorReport { parabolic: i, s0, cosets: tree.len(), violations }
}

/// A constant of the form `R^k · Π ζ(num) / Π ζ(den)` with integer or
/// rational arguments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueFactor {
    pub power_of_r: i64,
    pub numerator: Vec<Q>,
    pub denominator: Vec<Q>,
}

impl ResidueFactor {
    pub fn one() -> Self {
        ResidueFactor::default()
    }

    /// Cancels common zeta values and sorts both sides.
    pub fn normalize(mut self) -> Self {
        self.numerator.sort();
        self.denominator.sort();
        let (n, d) = cancel(&self.numerator, &self.denominator);
        self.numerator = n;
        self.denominator = d;
        self
    }

    pub fn mul(&self, o: &ResidueFactor) -> ResidueFactor {
        let mut n = self.numerator.clone();
        n.extend_from_slice(&o.numerator);
        let mut d = self.denominator.clone();
        d.extend_from_slice(&o.denominator);
        ResidueFactor { power_of_r: self.power_of_r + o.power_of_r, numerator: n, denominator: d }.normalize()
    }

    pub fn inverse(&self) -> ResidueFactor {
        ResidueFactor {
            power_of_r: -self.power_of_r,
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.power_of_r == 0 && self.numerator.is_empty() && self.denominator.is_empty()
    }

    pub fn plain(&self) -> String {
        render_constant(self, false)
    }

    pub fn latex(&self) -> String {
        render_constant(self, true)
    }
}

fn render_constant(r: &ResidueFactor, latex: bool) -> String {
    let zeta = if latex { "\\zeta" } else { "ζ" };
    let arg = |q: &Q| {
        if latex && *q.denom() != 1 {
            alloc::format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
        } else {
            crate::fmt_q(q)
        }
    };
    let side = |r_pow: i64, v: &[Q]| {
        let mut s = String::new();
        if r_pow == 1 {
            s.push('R');
        } else if r_pow > 1 {
            if latex {
                let _ = write!(s, "R^{{{}}}", r_pow);
            } else {
                let _ = write!(s, "R^{}", r_pow);
            }
        }
        for q in v {
            let _ = write!(s, "{}({})", zeta, arg(q));
        }
        s
    };
    let top = side(r.power_of_r.max(0), &r.numerator);
    let bottom = side((-r.power_of_r).max(0), &r.denominator);
    let top = if top.is_empty() { String::from("1") } else { top };
    if bottom.is_empty() {
        top
    } else if latex {
        alloc::format!("\\frac{{{}}}{{{}}}", top, bottom)
    } else {
        alloc::format!("{}/({})", top, bottom)
    }
}

/// `A_{w_P}`: the iterated residue of `C_{w_P}` at the Levi root hyperplanes,
/// in the minus-half convention.
///
/// Each Levi coroot of height `h` contributes `ζ(h)/ζ(h+1)`, with `ζ(1)`
/// replaced by `R`.
pub fn residue_factor(datum: &RootDatum, i: usize) -> ResidueFactor {
    let levi = datum.maximal_levi(i);
    let mut count: BTreeMap<i64, i64> = BTreeMap::new();
    for k in 0..datum.num_positive_roots() {
        if datum.root_in_levi(k, levi) {
            let h = datum.coroot_height(k);
            *count.entry(h).or_default() += 1;
            *count.entry(h + 1).or_default() -= 1;
        }
    }
    let mut out = ResidueFactor::one();
    for (h, c) in count {
        if h == 1 {
            out.power_of_r += c;
            continue;
        }
        let target = if c > 0 { &mut out.numerator } else { &mut out.denominator };
        for _ in 0..c.abs() {
            target.push(Q::from_integer(h));
        }
    }
    out.normalize()
}
