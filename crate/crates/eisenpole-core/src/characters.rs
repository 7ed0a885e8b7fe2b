//! Character families `χ_{P,s}`, modular characters and the `N_ε` counts.
//!
//! Two normalizations of the family attached to a maximal parabolic `P` are
//! in use, and every [`AffineWeight`] carries a tag saying which one it is:
//!
//! * [`Convention::PlusHalf`]: `χ_s = δ_P^{s+1/2} ⊗ δ_B^{-1/2}`, used by the
//!   pole pipeline;
//! * [`Convention::MinusHalf`]: `χ_s = δ_P^{s-1/2} ⊗ δ_B^{1/2}`, used by the
//!   identities pipeline and the orbit labels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub, SubAssign};

use crate::rootdata::{NodeSet, RootDatum};
use crate::{Error, Q};

/// An affine function `a·s + b` of one rational variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffLin {
    pub a: Q,
    pub b: Q,
}

impl AffLin {
    pub fn new(a: Q, b: Q) -> Self {
        AffLin { a, b }
    }

    pub fn constant(b: Q) -> Self {
        AffLin { a: Q::from_integer(0), b }
    }

    pub fn eval(&self, s: Q) -> Q {
        self.a * s + self.b
    }

    pub fn is_constant(&self) -> bool {
        self.a == Q::from_integer(0)
    }

    /// `self + k` for a rational constant.
    pub fn shift(&self, k: Q) -> Self {
        AffLin { a: self.a, b: self.b + k }
    }

    /// `1 - self`, the functional-equation partner.
    pub fn reflect(&self) -> Self {
        AffLin { a: -self.a, b: Q::from_integer(1) - self.b }
    }

    /// The unique root of `self = v`, if the slope is nonzero.
    pub fn solve(&self, v: Q) -> Option<Q> {
        if self.is_constant() {
            None
        } else {
            Some((v - self.b) / self.a)
        }
    }
}

impl Add for AffLin {
    type Output = AffLin;
    fn add(self, o: AffLin) -> AffLin {
        AffLin { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for AffLin {
    type Output = AffLin;
    fn sub(self, o: AffLin) -> AffLin {
        AffLin { a: self.a - o.a, b: self.b - o.b }
    }
}

impl SubAssign for AffLin {
    fn sub_assign(&mut self, o: AffLin) {
        self.a -= o.a;
        self.b -= o.b;
    }
}

impl Neg for AffLin {
    type Output = AffLin;
    fn neg(self) -> AffLin {
        AffLin { a: -self.a, b: -self.b }
    }
}

impl Mul<i64> for AffLin {
    type Output = AffLin;
    fn mul(self, k: i64) -> AffLin {
        AffLin { a: self.a * k, b: self.b * k }
    }
}

impl fmt::Display for AffLin {
    /// Renders as `8s+3`, `16s-3`, `-8s+3`, `s`, or a bare constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Q::from_integer(0);
        if self.a == zero {
            return f.write_str(&crate::fmt_q(&self.b));
        }
        if self.a == Q::from_integer(1) {
            f.write_str("s")?;
        } else if self.a == Q::from_integer(-1) {
            f.write_str("-s")?;
        } else {
            write!(f, "{}s", crate::fmt_q(&self.a))?;
        }
        if self.b > zero {
            write!(f, "+{}", crate::fmt_q(&self.b))
        } else if self.b < zero {
            write!(f, "-{}", crate::fmt_q(&-self.b))
        } else {
            Ok(())
        }
    }
}

/// Which normalization of `χ_{P,s}` a family uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convention {
    PlusHalf,
    MinusHalf,
}

impl Convention {
    pub fn name(&self) -> &'static str {
        match self {
            Convention::PlusHalf => "plus_half",
            Convention::MinusHalf => "minus_half",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plus_half" | "plus" => Some(Convention::PlusHalf),
            "minus_half" | "minus" => Some(Convention::MinusHalf),
            _ => None,
        }
    }
}

/// A family `χ(s) = s·v + u` of weights in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub v: Vec<Q>,
    pub u: Vec<Q>,
    pub convention: Convention,
}

impl AffineWeight {
    pub fn eval(&self, s: Q) -> Vec<Q> {
        self.v.iter().zip(&self.u).map(|(v, u)| *v * s + *u).collect()
    }

    /// Coordinates as affine functions of `s`.
    pub fn coords(&self) -> Vec<AffLin> {
        self.v.iter().zip(&self.u).map(|(&a, &b)| AffLin::new(a, b)).collect()
    }

    /// `⟨χ(s), α∨⟩` for the coroot aligned with positive root `k`.
    pub fn pairing(&self, datum: &RootDatum, k: usize) -> AffLin {
        AffLin::new(datum.pair_coroot(&self.v, k), datum.pair_coroot(&self.u, k))
    }
}

/// The `B` matrix: `δ_{P_i} = b_ii ϖ_i`, and for `i ≠ j` the parabolic
/// `P_i ∩ P_j` has `δ = b_ij ϖ_i + b_ji ϖ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl BMatrix {
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.entries.len()).map(|i| self.entries[i][i]).collect()
    }

    /// `c_ij = b_ij / b_ii - 1/2`.
    pub fn c(&self, i: usize, j: usize) -> Q {
        Q::new(self.entries[i][j], self.entries[i][i]) - Q::new(1, 2)
    }
}

/// `δ_B`, the sum of positive roots.
pub fn delta_b(datum: &RootDatum) -> Vec<Q> {
    delta_p(datum, 0)
}

/// Modular character of the standard parabolic with Levi node set `levi`.
pub fn delta_p(datum: &RootDatum, levi: NodeSet) -> Vec<Q> {
    let n = datum.rank();
    let mut acc = vec![0i64; n];
    for k in 0..datum.num_positive_roots() {
        if !datum.root_in_levi(k, levi) {
            for (a, x) in acc.iter_mut().zip(&datum.roots_in_weights[k]) {
                *a += x;
            }
        }
    }
    acc.into_iter().map(Q::from_integer).collect()
}

/// `b_ii` with `δ_{P_i} = b_ii ϖ_i`.
pub fn delta_coefficient(datum: &RootDatum, i: usize) -> i64 {
    *delta_p(datum, datum.maximal_levi(i))[i].numer()
}

pub fn b_matrix(datum: &RootDatum) -> BMatrix {
    let n = datum.rank();
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        entries[i][i] = delta_coefficient(datum, i);
        for j in i + 1..n {
            let levi = datum.all_nodes() & !(1 << i) & !(1 << j);
            let d = delta_p(datum, levi);
            entries[i][j] = *d[i].numer();
            entries[j][i] = *d[j].numer();
        }
    }
    BMatrix { entries }
}

pub fn check_parabolic(datum: &RootDatum, i: usize) -> Result<(), Error> {
    if i < datum.rank() {
        Ok(())
    } else {
        Err(Error::BadParabolic { rank: datum.rank(), index: i + 1 })
    }
}

/// The family `χ_{P_i,s}` in the given convention.
pub fn chi_family(datum: &RootDatum, i: usize, convention: Convention) -> AffineWeight {
    let n = datum.rank();
    let b = Q::from_integer(delta_coefficient(datum, i));
    let half = Q::new(1, 2);
    let mut v = vec![Q::from_integer(0); n];
    v[i] = b;
    let u: Vec<Q> = (0..n)
        .map(|k| {
            let half_delta = if k == i { b * half } else { Q::from_integer(0) };
            match convention {
                Convention::MinusHalf => Q::from_integer(1) - half_delta,
                Convention::PlusHalf => half_delta - Q::from_integer(1),
            }
        })
        .collect();
    AffineWeight { v, u, convention }
}

/// `N_ε(χ) = {α > 0 : ⟨χ, α∨⟩ = ε}` as indices into the positive roots.
pub fn n_epsilon(datum: &RootDatum, chi: &[Q], eps: Q) -> Vec<usize> {
    (0..datum.num_positive_roots())
        .filter(|&k| datum.pair_coroot(chi, k) == eps)
        .collect()
}

/// `|N_1| - |N_0| - (n-1)` for `χ_{P_i,s0}` in the minus-half convention.
pub fn d_p(datum: &RootDatum, i: usize, s0: Q) -> i64 {
    let chi = chi_family(datum, i, Convention::MinusHalf).eval(s0);
    d_p_of_weight(datum, &chi)
}

pub fn d_p_of_weight(datum: &RootDatum, chi: &[Q]) -> i64 {
    let n1 = n_epsilon(datum, chi, Q::from_integer(1)).len() as i64;
    let n0 = n_epsilon(datum, chi, Q::from_integer(0)).len() as i64;
    n1 - n0 - (datum.rank() as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(l: &str) -> RootDatum {
        RootDatum::from_label(l).unwrap()
    }

    #[test]
    fn delta_b_is_twice_rho() {
        for l in ["A1", "G2", "F4", "E6", "C3"] {
            let d = datum(l);
            assert!(delta_b(&d).iter().all(|x| *x == Q::from_integer(2)), "{l}");
        }
    }

    #[test]
    fn small_b_values() {
        let g2 = datum("G2");
        assert_eq!(b_matrix(&g2).diagonal(), vec![5, 3]);
        let f4 = datum("F4");
        assert_eq!(
            b_matrix(&f4).entries,
            vec![vec![8, 2, 3, 5], vec![4, 5, 3, 4], vec![5, 3, 7, 6], vec![6, 3, 2, 11]]
        );
        let e8 = datum("E8");
        assert_eq!(delta_coefficient(&e8, 0), 23);
        assert_eq!(delta_coefficient(&e8, 7), 29);
    }

    #[test]
    fn appendix_pairing() {
        let f4 = datum("F4");
        let chi = chi_family(&f4, 0, Convention::PlusHalf);
        assert_eq!(chi.pairing(&f4, 0), AffLin::new(Q::from_integer(8), Q::from_integer(3)));
        for (c, v) in [(Convention::PlusHalf, -1), (Convention::MinusHalf, 1)] {
            let chi = chi_family(&f4, 0, c);
            for j in 1..4 {
                assert_eq!(chi.pairing(&f4, j), AffLin::constant(Q::from_integer(v)));
            }
        }
    }

    #[test]
    fn longest_levi_element_swaps_conventions() {
        for l in ["G2", "F4", "B3"] {
            let d = datum(l);
            for i in 0..d.rank() {
                let w = d.longest_element(d.maximal_levi(i));
                let minus = chi_family(&d, i, Convention::MinusHalf);
                let plus = chi_family(&d, i, Convention::PlusHalf);
                for s in [Q::new(1, 2), Q::new(1, 7), Q::new(-3, 5)] {
                    assert_eq!(d.apply(&w, &minus.eval(s)), plus.eval(s));
                }
            }
        }
    }

    #[test]
    fn d_p_examples() {
        assert_eq!(d_p(&datum("G2"), 1, Q::new(1, 6)), 2);
        assert_eq!(d_p(&datum("F4"), 1, Q::new(1, 10)), 3);
        for l in ["G2", "F4", "E6", "A3"] {
            let d = datum(l);
            for i in 0..d.rank() {
                assert_eq!(d_p(&d, i, Q::new(1, 2)), 1);
            }
        }
    }

    #[test]
    fn levi_roots_are_in_n1() {
        let d = datum("F4");
        let chi = chi_family(&d, 2, Convention::MinusHalf).eval(Q::new(3, 14));
        let n1 = n_epsilon(&d, &chi, Q::from_integer(1));
        for j in [0usize, 1, 3] {
            assert!(n1.contains(&j));
        }
    }

    #[test]
    fn afflin_display() {
        use alloc::string::ToString;
        assert_eq!(AffLin::new(Q::from_integer(16), Q::from_integer(-3)).to_string(), "16s-3");
        assert_eq!(AffLin::new(Q::from_integer(1), Q::from_integer(0)).to_string(), "s");
        assert_eq!(AffLin::constant(Q::new(3, 2)).to_string(), "3/2");
    }
}
