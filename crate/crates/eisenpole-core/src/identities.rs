//! Admissible data and the constants relating leading Laurent coefficients of
//! Eisenstein series on different maximal parabolics.
//!
//! Throughout, `χ_{P_i,s}` is the minus-half family. A quintuple
//! `(P_i, s0, P_j, t0, w)` is admissible when `w·χ_{P_i,s0} = χ_{P_j,t0}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::characters::{b_matrix, chi_family, d_p_of_weight, n_epsilon, AffineWeight, Convention};
use crate::gkfactors::{residue_factor, ResidueFactor};
use crate::rootdata::{RootDatum, WeylElement};
use crate::{fmt_q, Q};

/// A quintuple `(P_i, s0, P_j, t0, w)`; parabolic indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleData {
    pub i: usize,
    pub s0: Q,
    pub j: usize,
    pub t0: Q,
    pub w: WeylElement,
    pub positive: bool,
    pub special: bool,
}

impl AdmissibleData {
    pub fn new(datum: &RootDatum, i: usize, s0: Q, j: usize, t0: Q, w: WeylElement, special: bool) -> Option<Self> {
        let d = AdmissibleData { i, s0, j, t0, w, positive: s0 >= Q::from_integer(0) && t0 >= Q::from_integer(0), special };
        if d.verify(datum) {
            Some(d)
        } else {
            None
        }
    }

    /// The exact weight equation `w·χ_{P_i,s0} = χ_{P_j,t0}`.
    pub fn verify(&self, datum: &RootDatum) -> bool {
        let a = chi_family(datum, self.i, Convention::MinusHalf).eval(self.s0);
        let b = chi_family(datum, self.j, Convention::MinusHalf).eval(self.t0);
        datum.apply(&self.w, &a) == b
    }

    /// `(P_j, t0, P_i, s0, w^{-1})`.
    pub fn reversed(&self, datum: &RootDatum) -> Self {
        AdmissibleData {
            i: self.j,
            s0: self.t0,
            j: self.i,
            t0: self.s0,
            w: datum.inverse(&self.w),
            positive: self.positive,
            special: self.special,
        }
    }

    pub fn is_trivial(&self) -> bool {
        let half = Q::new(1, 2);
        self.s0 == half && self.t0 == half && self.w.is_identity()
    }

    /// `(P4, 1/7, P3, 0, w3w4w1...)`.
    pub fn plain(&self) -> String {
        alloc::format!(
            "(P{}, {}, P{}, {}, {})",
            self.i + 1,
            fmt_q(&self.s0),
            self.j + 1,
            fmt_q(&self.t0),
            self.w.compact()
        )
    }
}

/// `c_ij = b_ij / b_ii - 1/2`.
pub fn c_ij(datum: &RootDatum, i: usize, j: usize) -> Q {
    b_matrix(datum).c(i, j)
}

/// `r_i = w_0 w_{M_i}`: sends `χ_{P_i,s}` to `χ_{P_i,-s}` when `-1 ∈ W`.
pub fn sign_flip(datum: &RootDatum, i: usize) -> WeylElement {
    datum.compose(&datum.longest_element(datum.all_nodes()), &datum.longest_element(datum.maximal_levi(i)))
}

/// The special data for the ordered pair `(i, j)`.
///
/// The base datum is `(P_i, c_ij, P_j, -c_ji, w_R w_{M_i})`, with `w_R` the
/// longest element of the Levi of `P_i ∩ P_j`. When `-1 ∈ W` the sign-flipped
/// datum `(P_i, |c_ij|, P_j, |c_ji|)` is added as well.
pub fn special_admissible(datum: &RootDatum, i: usize, j: usize) -> Vec<AdmissibleData> {
    let b = b_matrix(datum);
    let s0 = b.c(i, j);
    let t0 = -b.c(j, i);
    let r_levi = datum.all_nodes() & !(1 << i) & !(1 << j);
    let base = datum.compose(&datum.longest_element(r_levi), &datum.longest_element(datum.maximal_levi(i)));
    let mut out = Vec::new();
    out.extend(AdmissibleData::new(datum, i, s0, j, t0, base.clone(), true));
    if datum.cartan_type.has_minus_one() {
        let zero = Q::from_integer(0);
        let mut w = base;
        if s0 < zero {
            w = datum.compose(&w, &sign_flip(datum, i));
        }
        if t0 < zero {
            w = datum.compose(&sign_flip(datum, j), &w);
        }
        let flipped = AdmissibleData::new(datum, i, if s0 < zero { -s0 } else { s0 }, j, if t0 < zero { -t0 } else { t0 }, w, true);
        if let Some(f) = flipped {
            if !out.iter().any(|d| d.s0 == f.s0 && d.t0 == f.t0) {
                out.push(f);
            }
        }
    }
    out
}

/// One linear piece of the dominant profile: on `[lo, hi]` the dominant
/// representative of `χ(s)` is `W·χ(s) = s·slope + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfilePiece {
    pub lo: Q,
    pub hi: Q,
    pub w: WeylElement,
    pub slope: Vec<Q>,
    pub offset: Vec<Q>,
}

/// Piecewise description of `s ↦ dom(χ_{P_i,s})` on a closed range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomProfile {
    pub parabolic: usize,
    pub breakpoints: Vec<Q>,
    pub pieces: Vec<ProfilePiece>,
}

impl DomProfile {
    /// Dominant value at `s` read off the profile.
    pub fn value(&self, s: Q) -> Option<Vec<Q>> {
        self.pieces
            .iter()
            .find(|p| p.lo <= s && s <= p.hi)
            .map(|p| p.slope.iter().zip(&p.offset).map(|(a, b)| *a * s + *b).collect())
    }
}

/// Points of `(lo, hi)` where a coroot pairing of `χ_{P_i,s}` vanishes.
pub fn breakpoints(datum: &RootDatum, i: usize, lo: Q, hi: Q) -> Vec<Q> {
    let chi = chi_family(datum, i, Convention::MinusHalf);
    let mut set = BTreeSet::new();
    for k in 0..datum.num_positive_roots() {
        if let Some(s) = chi.pairing(datum, k).solve(Q::from_integer(0)) {
            if lo < s && s < hi {
                set.insert(s);
            }
        }
    }
    set.into_iter().collect()
}

fn apply_affine(datum: &RootDatum, w: &WeylElement, chi: &AffineWeight) -> (Vec<Q>, Vec<Q>) {
    (datum.apply(w, &chi.v), datum.apply(w, &chi.u))
}

pub fn dom_profile(datum: &RootDatum, i: usize, lo: Q, hi: Q) -> DomProfile {
    let chi = chi_family(datum, i, Convention::MinusHalf);
    let bps = breakpoints(datum, i, lo, hi);
    let mut edges = alloc::vec![lo];
    edges.extend(bps.iter().copied());
    edges.push(hi);
    let mut pieces = Vec::new();
    for win in edges.windows(2) {
        let (a, b) = (win[0], win[1]);
        let mid = if a == b { a } else { (a + b) / 2 };
        let (_, w) = datum.dominant_representative(&chi.eval(mid));
        let (slope, offset) = apply_affine(datum, &w, &chi);
        pieces.push(ProfilePiece { lo: a, hi: b, w, slope, offset });
    }
    DomProfile { parabolic: i, breakpoints: bps, pieces }
}

/// Solves `s·v1 + u1 = t·v2 + u2` for `(s, t)` inside `[a0,a1] × [b0,b1]`.
/// A one-parameter family of solutions yields the endpoints of its segment.
fn solve_pair(v1: &[Q], u1: &[Q], v2: &[Q], u2: &[Q], a: (Q, Q), b: (Q, Q)) -> Vec<(Q, Q)> {
    let n = v1.len();
    let rhs: Vec<Q> = (0..n).map(|k| u2[k] - u1[k]).collect();
    let zero = Q::from_integer(0);
    // Find two independent rows of the n × 2 matrix [v1, -v2].
    let mut sol = None;
    'outer: for p in 0..n {
        for q in p + 1..n {
            let det = v1[p] * (-v2[q]) - (-v2[p]) * v1[q];
            if det != zero {
                let s = (rhs[p] * (-v2[q]) - (-v2[p]) * rhs[q]) / det;
                let t = (v1[p] * rhs[q] - rhs[p] * v1[q]) / det;
                sol = Some((s, t));
                break 'outer;
            }
        }
    }
    let inside = |s: Q, t: Q| a.0 <= s && s <= a.1 && b.0 <= t && t <= b.1;
    let satisfies = |s: Q, t: Q| (0..n).all(|k| v1[k] * s - v2[k] * t == rhs[k]);
    if let Some((s, t)) = sol {
        return if satisfies(s, t) && inside(s, t) { alloc::vec![(s, t)] } else { Vec::new() };
    }
    // Rank one: v1 = λ v2 (both are nonzero).
    let p = match (0..n).find(|&k| v2[k] != zero) {
        Some(p) => p,
        None => return Vec::new(),
    };
    let lambda = v1[p] / v2[p];
    let c = rhs[p] / v2[p];
    if (0..n).any(|k| v1[k] != lambda * v2[k] || rhs[k] != c * v2[k]) {
        return Vec::new();
    }
    // λ s - t = c; clip the line to the rectangle.
    let mut pts = Vec::new();
    for s in [a.0, a.1] {
        let t = lambda * s - c;
        if inside(s, t) {
            pts.push((s, t));
        }
    }
    if lambda != zero {
        for t in [b.0, b.1] {
            let s = (t + c) / lambda;
            if inside(s, t) {
                pts.push((s, t));
            }
        }
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Admissible data with `P = P_i`, `Q = P_j`, `s0, t0 ∈ [lo, hi]`, found by
/// intersecting the two dominant profiles piece by piece.
pub fn find_admissible_in(datum: &RootDatum, i: usize, j: usize, lo: Q, hi: Q, positive_only: bool) -> Vec<AdmissibleData> {
    let pi = dom_profile(datum, i, lo, hi);
    let pj = dom_profile(datum, j, lo, hi);
    let chi_i = chi_family(datum, i, Convention::MinusHalf);
    let chi_j = chi_family(datum, j, Convention::MinusHalf);
    let mut found = BTreeSet::new();
    for a in &pi.pieces {
        for b in &pj.pieces {
            for (s, t) in solve_pair(&a.slope, &a.offset, &b.slope, &b.offset, (a.lo, a.hi), (b.lo, b.hi)) {
                let (ds, ws) = datum.dominant_representative(&chi_i.eval(s));
                let (dt, wt) = datum.dominant_representative(&chi_j.eval(t));
                if ds != dt {
                    continue;
                }
                let w = datum.compose(&datum.inverse(&wt), &ws);
                if let Some(d) = AdmissibleData::new(datum, i, s, j, t, w, false) {
                    if !positive_only || d.positive {
                        found.insert(d);
                    }
                }
            }
        }
    }
    let specials: BTreeSet<(Q, Q)> = special_admissible(datum, i, j).into_iter().map(|d| (d.s0, d.t0)).collect();
    found
        .into_iter()
        .map(|mut d| {
            d.special = specials.contains(&(d.s0, d.t0));
            d
        })
        .collect()
}

/// [`find_admissible_in`] on the default range `[0, 1/2]`.
pub fn find_admissible(datum: &RootDatum, i: usize, j: usize, positive_only: bool) -> Vec<AdmissibleData> {
    find_admissible_in(datum, i, j, Q::from_integer(0), Q::new(1, 2), positive_only)
}

/// `ε_{s0} = b^{|N_1|-|N_0|-(n-1)} Π_{N_0} 1/n_i Π_{N_1 ∖ Δ_P} n_i`.
pub fn epsilon_factor(datum: &RootDatum, i: usize, s0: Q) -> Q {
    let chi = chi_family(datum, i, Convention::MinusHalf).eval(s0);
    let b = crate::characters::delta_coefficient(datum, i);
    let n0 = n_epsilon(datum, &chi, Q::from_integer(0));
    let n1 = n_epsilon(datum, &chi, Q::from_integer(1));
    let e = d_p_of_weight(datum, &chi);
    let mut eps = if e >= 0 { Q::from_integer(b.pow(e as u32)) } else { Q::new(1, b.pow((-e) as u32)) };
    for k in n0 {
        eps /= Q::from_integer(datum.positive_coroots[k][i]);
    }
    for k in n1 {
        let is_levi_simple = k < datum.rank() && k != i;
        if !is_levi_simple {
            eps *= Q::from_integer(datum.positive_coroots[k][i]);
        }
    }
    eps
}

/// The assembled constant and its ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityConstant {
    pub epsilon_s: Q,
    pub epsilon_t: Q,
    pub d: i64,
    pub d_pi: i64,
    pub d_pj: i64,
    /// `Π ζ(⟨χ_s,α∨⟩)/ζ(⟨χ_s,α∨⟩+1)` over the inversions of `w` outside
    /// `N_{-1} ∪ N_0 ∪ N_1`, with arguments folded to `≥ 1/2`.
    pub h3: ResidueFactor,
    /// `A_{w_{P_j}} / A_{w_{P_i}}`.
    pub a_ratio: ResidueFactor,
    pub rational: Q,
    pub zeta: ResidueFactor,
    /// Nonvanishing assumptions on zeta values off the integers.
    pub assumptions: Vec<String>,
}

impl IdentityConstant {
    pub fn plain(&self) -> String {
        if self.zeta.is_one() {
            fmt_q(&self.rational)
        } else {
            alloc::format!("{} × {}", fmt_q(&self.rational), self.zeta.plain())
        }
    }

    pub fn latex(&self) -> String {
        let r = crate::laurent::latex_q(&self.rational);
        if self.zeta.is_one() {
            r
        } else {
            alloc::format!("{} \\times {}", r, self.zeta.latex())
        }
    }
}

fn fold(a: Q) -> Q {
    let b = Q::from_integer(1) - a;
    if a >= b {
        a
    } else {
        b
    }
}

/// The `h₃` quotient for a datum.
pub fn h3_quotient(datum: &RootDatum, data: &AdmissibleData) -> ResidueFactor {
    let chi = chi_family(datum, data.i, Convention::MinusHalf).eval(data.s0);
    let mut out = ResidueFactor::one();
    for k in datum.inversion_set(&data.w) {
        let p = datum.pair_coroot(&chi, k);
        if p == Q::from_integer(-1) || p == Q::from_integer(0) || p == Q::from_integer(1) {
            continue;
        }
        out.numerator.push(fold(p));
        out.denominator.push(fold(p + Q::from_integer(1)));
    }
    out.normalize()
}

pub fn identity_constant(datum: &RootDatum, data: &AdmissibleData) -> IdentityConstant {
    let chi_s = chi_family(datum, data.i, Convention::MinusHalf).eval(data.s0);
    let chi_t = chi_family(datum, data.j, Convention::MinusHalf).eval(data.t0);
    let m1 = Q::from_integer(-1);
    let d = n_epsilon(datum, &chi_t, m1).len() as i64 - n_epsilon(datum, &chi_s, m1).len() as i64;
    let epsilon_s = epsilon_factor(datum, data.i, data.s0);
    let epsilon_t = epsilon_factor(datum, data.j, data.t0);
    let h3 = h3_quotient(datum, data);
    let a_ratio = residue_factor(datum, data.j).mul(&residue_factor(datum, data.i).inverse());
    let mut rd = ResidueFactor { power_of_r: d, ..ResidueFactor::one() };
    for _ in 0..d.abs() {
        if d > 0 {
            rd.denominator.push(Q::from_integer(2));
        } else {
            rd.numerator.push(Q::from_integer(2));
        }
    }
    let zeta = h3.mul(&rd).mul(&a_ratio);
    let assumptions = zeta
        .numerator
        .iter()
        .chain(&zeta.denominator)
        .filter(|q| !q.is_integer())
        .map(|q| alloc::format!("ζ({}) ≠ 0", fmt_q(q)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    IdentityConstant {
        epsilon_s,
        epsilon_t,
        d,
        d_pi: d_p_of_weight(datum, &chi_s),
        d_pj: d_p_of_weight(datum, &chi_t),
        h3,
        a_ratio,
        rational: epsilon_t / epsilon_s,
        zeta,
        assumptions,
    }
}

/// Chooses the orientation with `d ≥ 0`, and `i < j` when `d = 0`.
pub fn orient(datum: &RootDatum, data: AdmissibleData) -> AdmissibleData {
    let c = identity_constant(datum, &data);
    if c.d < 0 || (c.d == 0 && data.i > data.j) {
        data.reversed(datum)
    } else {
        data
    }
}

/// All positive admissible data between distinct maximal parabolics, oriented
/// by [`orient`], deduplicated and sorted by `(i, j, s0, t0)`.
pub fn all_admissible(datum: &RootDatum, lo: Q, hi: Q) -> Vec<AdmissibleData> {
    let n = datum.rank();
    let mut set = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for d in find_admissible_in(datum, i, j, lo, hi, true) {
                set.insert(orient(datum, d));
            }
        }
    }
    let mut v: Vec<AdmissibleData> = set.into_iter().collect();
    v.sort_by_key(|a| (a.i, a.j, a.s0, a.t0));
    v
}

/// Connected components of the graph whose vertices are `(P, s)` and whose
/// edges are the given data.
pub fn chains(data: &[AdmissibleData]) -> Vec<Vec<(usize, Q)>> {
    let mut parent: BTreeMap<(usize, Q), (usize, Q)> = BTreeMap::new();
    fn find(p: &mut BTreeMap<(usize, Q), (usize, Q)>, x: (usize, Q)) -> (usize, Q) {
        let mut r = x;
        while p[&r] != r {
            r = p[&r];
        }
        let mut y = x;
        while p[&y] != r {
            let next = p[&y];
            p.insert(y, r);
            y = next;
        }
        r
    }
    for d in data {
        for v in [(d.i, d.s0), (d.j, d.t0)] {
            parent.entry(v).or_insert(v);
        }
        let a = find(&mut parent, (d.i, d.s0));
        let b = find(&mut parent, (d.j, d.t0));
        if a != b {
            parent.insert(a.max(b), a.min(b));
        }
    }
    let keys: Vec<(usize, Q)> = parent.keys().copied().collect();
    let mut groups: BTreeMap<(usize, Q), Vec<(usize, Q)>> = BTreeMap::new();
    for k in keys {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(k);
    }
    groups.into_values().collect()
}
