//! Truncated Laurent series in `(s - s0)` with coefficients in a free
//! polynomial ring over formal zeta symbols.
//!
//! `ζ` here is the completed zeta, with `ζ(x) = ζ(1 - x)` and simple poles at
//! `0` and `1`. The symbols are:
//!
//! * `c_j` for `j ≥ -1`: `ζ(x) = Σ c_j (x - 1)^j` near `1`; `c_{-1}` is the
//!   residue `R`;
//! * `ζ(a)_j` for rational `a ≥ 1/2`, `a ≠ 1`: `ζ(x) = Σ ζ(a)_j (x - a)^j`.
//!
//! Before expanding `ζ(ℓ(s))` at `s0`, an argument with `ℓ(s0) < 1/2` is
//! replaced by `1 - ℓ`, so only expansion points `a ≥ 1/2` occur. At `a = 1/2`
//! the odd coefficients vanish and are never produced.
//!
//! Series arithmetic is generic over a [`CoeffRing`]. [`SymRing`] gives the
//! exact symbolic coefficients; [`ModRing`] evaluates every symbol at a
//! pseudo-random point of `F_p`, `p = 2^61 - 1`, which gives a fast zero test
//! whose false-zero probability is bounded by the degree over `p`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::characters::AffLin;
use crate::{BigQ, Error, Q};

/// A formal zeta symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `c_j`, the `j`-th Laurent coefficient at `1`; `C(-1)` is `R`.
    C(i32),
    /// `ζ(a)_j`, the `j`-th Taylor coefficient at `a`.
    Z(Q, u32),
}

impl Atom {
    pub fn r() -> Atom {
        Atom::C(-1)
    }

    pub fn plain(&self) -> String {
        match self {
            Atom::C(j) => alloc::format!("c_{{{}}}", j),
            Atom::Z(a, j) => alloc::format!("ζ({})_{}", crate::fmt_q(a), j),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Atom::C(j) => alloc::format!("c_{{{}}}", j),
            Atom::Z(a, j) => {
                if *a.denom() == 1 {
                    alloc::format!("\\zeta({})_{{{}}}", a.numer(), j)
                } else {
                    alloc::format!("\\zeta(\\frac{{{}}}{{{}}})_{{{}}}", a.numer(), a.denom(), j)
                }
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

/// A monomial: sorted `(atom, exponent)` pairs with positive exponents.
pub type Monomial = Vec<(Atom, u32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                out.push((a[i].0.clone(), a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A polynomial in [`Atom`]s with rational coefficients, in canonical form
/// (no zero coefficients, monomials sorted).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, BigQ>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::constant(BigQ::one())
    }

    pub fn constant(c: BigQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        SymPoly { terms }
    }

    pub fn atom(a: Atom) -> Self {
        SymPoly::monomial(BigQ::one(), vec![(a, 1)])
    }

    pub fn monomial(c: BigQ, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigQ)> {
        self.terms.iter()
    }

    /// All atoms occurring in the polynomial.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut v: Vec<Atom> = self.terms.keys().flat_map(|m| m.iter().map(|(a, _)| a.clone())).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add_assign(&mut self, o: &SymPoly) {
        for (m, c) in &o.terms {
            add_term(&mut self.terms, m.clone(), c.clone());
        }
    }

    pub fn add(&self, o: &SymPoly) -> SymPoly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, o: &SymPoly) -> SymPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &BigQ) -> SymPoly {
        if k.is_zero() {
            return SymPoly::zero();
        }
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, o: &SymPoly) -> SymPoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                add_term(&mut terms, mono_mul(ma, mb), ca * cb);
            }
        }
        SymPoly { terms }
    }

    /// Evaluates with a caller-supplied value for each atom.
    pub fn eval_mod(&self, ring: &ModRing) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = ring.big_rational(c);
            for (a, e) in m {
                let v = ring.atom(a);
                for _ in 0..*e {
                    t = mulmod(t, v);
                }
            }
            acc = addmod(acc, t);
        }
        acc
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            if !unit || m.is_empty() {
                if latex && !a.denom().is_one() {
                    let _ = write!(s, "\\frac{{{}}}{{{}}}", a.numer(), a.denom());
                } else {
                    let _ = write!(s, "{}", a);
                }
            }
            for (i, (atom, e)) in m.iter().enumerate() {
                if latex {
                    if i > 0 || !unit {
                        s.push(' ');
                    }
                    s.push_str(&atom.latex());
                    if *e > 1 {
                        let _ = write!(s, "^{{{}}}", e);
                    }
                } else {
                    if i > 0 || !unit {
                        s.push('·');
                    }
                    s.push_str(&atom.plain());
                    if *e > 1 {
                        let _ = write!(s, "^{}", e);
                    }
                }
            }
        }
        s
    }

    pub fn plain(&self) -> String {
        self.render(false)
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, BigQ>, m: Monomial, c: BigQ) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get_mut();
            *v += c;
            if v.is_zero() {
                e.remove();
            }
        }
    }
}

pub fn big(q: &Q) -> BigQ {
    BigQ::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// A coefficient ring for [`Series`].
pub trait CoeffRing {
    type E: Clone + fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn atom(&self, a: &Atom) -> Self::E;
    fn rational(&self, q: &BigQ) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
}

/// Exact symbolic coefficients.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymRing;

impl CoeffRing for SymRing {
    type E = SymPoly;
    fn zero(&self) -> SymPoly {
        SymPoly::zero()
    }
    fn one(&self) -> SymPoly {
        SymPoly::one()
    }
    fn atom(&self, a: &Atom) -> SymPoly {
        SymPoly::atom(a.clone())
    }
    fn rational(&self, q: &BigQ) -> SymPoly {
        SymPoly::constant(q.clone())
    }
    fn add(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        a.add(b)
    }
    fn mul(&self, a: &SymPoly, b: &SymPoly) -> SymPoly {
        if a.is_zero() || b.is_zero() {
            return SymPoly::zero();
        }
        a.mul(b)
    }
    fn is_zero(&self, a: &SymPoly) -> bool {
        a.is_zero()
    }
}

const P: u64 = (1u64 << 61) - 1;

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn mulmod(a: u64, b: u64) -> u64 {
    let x = (a as u128) * (b as u128);
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    addmod(lo, hi)
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Evaluation of every symbol at a seeded pseudo-random point of `F_p`.
#[derive(Clone, Copy, Debug)]
pub struct ModRing {
    pub seed: u64,
}

impl ModRing {
    pub fn new(seed: u64) -> Self {
        ModRing { seed }
    }

    fn reduce_int(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(P);
        let mut r = v % &p;
        if r.is_negative() {
            r += &p;
        }
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    pub fn big_rational(&self, q: &BigQ) -> u64 {
        let n = self.reduce_int(q.numer());
        let d = self.reduce_int(q.denom());
        mulmod(n, powmod(d, P - 2))
    }
}

impl CoeffRing for ModRing {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn atom(&self, a: &Atom) -> u64 {
        let key = match a {
            Atom::C(j) => splitmix(self.seed ^ (*j as i64 as u64).wrapping_mul(0x1000_0000_01b3)),
            Atom::Z(q, j) => {
                let h = splitmix(*q.numer() as u64 ^ splitmix(*q.denom() as u64));
                splitmix(self.seed ^ splitmix(h ^ (*j as u64 + 0x5151)))
            }
        };
        1 + key % (P - 1)
    }
    fn rational(&self, q: &BigQ) -> u64 {
        self.big_rational(q)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        addmod(*a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// A truncated Laurent series `Σ_{k=low}^{trunc} coeffs[k-low] (s - s0)^k`.
/// Exponents above `trunc` are unknown; missing ones below are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<E> {
    pub s0: Q,
    pub low: i32,
    pub trunc: i32,
    pub coeffs: Vec<E>,
}

/// A Laurent series with exact symbolic coefficients.
pub type LaurentPoly = Series<SymPoly>;

impl<E: Clone + fmt::Debug> Series<E> {
    pub fn constant<R: CoeffRing<E = E>>(ring: &R, s0: Q, c: E, trunc: i32) -> Self {
        let mut coeffs = Vec::new();
        if trunc >= 0 {
            coeffs.push(c);
            coeffs.resize(trunc as usize + 1, ring.zero());
        }
        Series { s0, low: 0, trunc, coeffs }
    }

    pub fn one<R: CoeffRing<E = E>>(ring: &R, s0: Q, trunc: i32) -> Self {
        Series::constant(ring, s0, ring.one(), trunc)
    }

    /// Coefficient of `(s - s0)^k`, or `None` when `k` is past the truncation.
    pub fn coeff<R: CoeffRing<E = E>>(&self, ring: &R, k: i32) -> Option<E> {
        if k > self.trunc {
            None
        } else if k < self.low || (k - self.low) as usize >= self.coeffs.len() {
            Some(ring.zero())
        } else {
            Some(self.coeffs[(k - self.low) as usize].clone())
        }
    }

    pub fn mul<R: CoeffRing<E = E>>(&self, o: &Self, ring: &R) -> Result<Self, Error> {
        if self.s0 != o.s0 {
            return Err(Error::MismatchedPoint);
        }
        let low = self.low + o.low;
        let trunc = (self.trunc + o.low).min(o.trunc + self.low);
        let len = (trunc - low + 1).max(0) as usize;
        let mut coeffs = vec![ring.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= len {
                    break;
                }
                let p = ring.mul(a, b);
                coeffs[k] = ring.add(&coeffs[k], &p);
            }
        }
        Ok(Series { s0: self.s0, low, trunc, coeffs })
    }

    pub fn add<R: CoeffRing<E = E>>(&self, o: &Self, ring: &R) -> Result<Self, Error> {
        if self.s0 != o.s0 {
            return Err(Error::MismatchedPoint);
        }
        let low = self.low.min(o.low);
        let trunc = self.trunc.min(o.trunc);
        let len = (trunc - low + 1).max(0) as usize;
        let coeffs = (0..len)
            .map(|k| {
                let e = low + k as i32;
                let a = self.coeff(ring, e).unwrap_or_else(|| ring.zero());
                let b = o.coeff(ring, e).unwrap_or_else(|| ring.zero());
                ring.add(&a, &b)
            })
            .collect();
        Ok(Series { s0: self.s0, low, trunc, coeffs })
    }

    pub fn scale<R: CoeffRing<E = E>>(&self, k: &E, ring: &R) -> Self {
        Series {
            s0: self.s0,
            low: self.low,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| ring.mul(c, k)).collect(),
        }
    }

    /// Least exponent with a nonzero coefficient, with that coefficient.
    pub fn leading<R: CoeffRing<E = E>>(&self, ring: &R) -> Option<(i32, E)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !ring.is_zero(c))
            .map(|(k, c)| (self.low + k as i32, c.clone()))
            .filter(|(k, _)| *k <= self.trunc)
    }
}

/// Local form of `ζ(ℓ(s))` at `s0` after the functional-equation rewrite:
/// the expansion point `value ≥ 1/2` and the slope in `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalKey {
    pub value: Q,
    pub slope: Q,
}

impl LocalKey {
    pub fn of(arg: &AffLin, s0: Q) -> LocalKey {
        let v = arg.eval(s0);
        let half = Q::new(1, 2);
        if v < half {
            LocalKey { value: Q::from_integer(1) - v, slope: -arg.a }
        } else if v == half && arg.a < Q::from_integer(0) {
            // Only even coefficients survive at 1/2, so the slope sign is free.
            LocalKey { value: v, slope: -arg.a }
        } else {
            LocalKey { value: v, slope: arg.a }
        }
    }

    pub fn is_pole(&self) -> bool {
        self.value == Q::from_integer(1)
    }
}

/// Expansion of `ζ` at a [`LocalKey`] through exponent `trunc`.
pub fn expand_key<R: CoeffRing>(key: &LocalKey, s0: Q, trunc: i32, ring: &R) -> Result<Series<R::E>, Error> {
    let one = Q::from_integer(1);
    let zero = Q::from_integer(0);
    let a = key.slope;
    if key.value == one {
        if a == zero {
            return Err(Error::DegenerateArgument);
        }
        let mut coeffs = Vec::new();
        let mut pow = one / a;
        for j in -1..=trunc {
            let c = ring.mul(&ring.atom(&Atom::C(j)), &ring.rational(&big(&pow)));
            coeffs.push(c);
            pow *= a;
        }
        return Ok(Series { s0, low: -1, trunc, coeffs });
    }
    let half = Q::new(1, 2);
    let mut coeffs = Vec::new();
    let mut pow = one;
    for j in 0..=trunc.max(-1) {
        if j > 0 && a == zero {
            coeffs.push(ring.zero());
            continue;
        }
        if key.value == half && j % 2 == 1 {
            coeffs.push(ring.zero());
        } else {
            let c = ring.mul(&ring.atom(&Atom::Z(key.value, j as u32)), &ring.rational(&big(&pow)));
            coeffs.push(c);
        }
        pow *= a;
    }
    Ok(Series { s0, low: 0, trunc, coeffs })
}

/// Laurent expansion of `ζ(arg(s))` at `s0` through exponent `order`.
pub fn zeta_expand(arg: &AffLin, s0: Q, order: i32) -> Result<LaurentPoly, Error> {
    expand_key(&LocalKey::of(arg, s0), s0, order, &SymRing)
}

/// How a reported leading coefficient is known to be nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Certificate {
    /// A single monomial; nonzero as long as every symbol in it is.
    Monomial,
    /// A sum of monomials whose numerical value was confirmed nonzero.
    Numeric,
    /// A sum of monomials, nonzero in the free ring but not evaluated.
    Symbolic,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::Monomial => "monomial",
            Certificate::Numeric => "numeric",
            Certificate::Symbolic => "symbolic",
        }
    }
}

/// Numerical confirmation that a symbolic coefficient is nonzero.
pub trait Certifier: Sync {
    /// `Some(true)` when the value is certified nonzero, `Some(false)` when it
    /// is numerically zero at the working precision, `None` if undecided.
    fn nonzero(&self, p: &SymPoly) -> Option<bool>;
}

/// A certifier that never evaluates anything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoCertifier;

impl Certifier for NoCertifier {
    fn nonzero(&self, _: &SymPoly) -> Option<bool> {
        None
    }
}

/// Pole order of a series together with its leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleOrder {
    pub order: i32,
    pub leading: SymPoly,
    pub certificate: Certificate,
}

pub fn certify(p: &SymPoly, certifier: &dyn Certifier) -> Certificate {
    if p.is_monomial() {
        Certificate::Monomial
    } else if certifier.nonzero(p) == Some(true) {
        Certificate::Numeric
    } else {
        Certificate::Symbolic
    }
}

/// `order = -(least exponent with a nonzero coefficient)`.
pub fn pole_order(p: &LaurentPoly, certifier: &dyn Certifier) -> Result<PoleOrder, Error> {
    match p.leading(&SymRing) {
        Some((k, c)) => Ok(PoleOrder { order: -k, certificate: certify(&c, certifier), leading: c }),
        None => Err(Error::Inconclusive),
    }
}

impl LaurentPoly {
    fn render(&self, latex: bool) -> String {
        let mut parts = Vec::new();
        let x = if latex {
            alloc::format!("(s-{})", latex_q(&self.s0))
        } else {
            alloc::format!("(s-{})", crate::fmt_q(&self.s0))
        };
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.low + i as i32;
            let body = if latex { c.latex() } else { c.plain() };
            let term = match k {
                _ if latex && k == -1 => alloc::format!("\\frac{{{}}}{{{}}}", body, x),
                _ if latex && k < 0 => alloc::format!("\\frac{{{}}}{{{}^{{{}}}}}", body, x, -k),
                _ if latex && c.len() == 1 && k == 0 => body,
                _ if latex && c.len() == 1 && k == 1 => alloc::format!("{}{}", body, x),
                _ if latex && c.len() == 1 => alloc::format!("{}{}^{{{}}}", body, x, k),
                0 => alloc::format!("({})", body),
                1 => alloc::format!("({}){}", body, x),
                _ if latex => alloc::format!("({}){}^{{{}}}", body, x, k),
                _ => alloc::format!("({}){}^{}", body, x, k),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            parts.push(String::from("0"));
        }
        let mut s = String::new();
        for (k, t) in parts.iter().enumerate() {
            match (k, t.strip_prefix('-')) {
                (0, _) => s.push_str(t),
                (_, Some(rest)) => {
                    s.push_str(" - ");
                    s.push_str(rest);
                }
                (_, None) => {
                    s.push_str(" + ");
                    s.push_str(t);
                }
            }
        }
        match self.trunc + 1 {
            0 => s.push_str(" + O(1)"),
            1 => {
                let _ = write!(s, " + O({})", x);
            }
            e if latex => {
                let _ = write!(s, " + O({}^{{{}}})", x, e);
            }
            e => {
                let _ = write!(s, " + O({}^{})", x, e);
            }
        }
        s
    }

    pub fn plain(&self) -> String {
        self.render(false)
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }
}

/// `\frac{a}{b}`, or the integer itself.
pub fn latex_q(q: &Q) -> String {
    if *q.denom() == 1 {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> AffLin {
        AffLin::new(Q::from_integer(a), Q::from_integer(b))
    }

    fn bq(n: i64, d: i64) -> BigQ {
        BigQ::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn appendix_single_expansions() {
        let s0 = Q::new(1, 4);
        let y1 = zeta_expand(&lin(16, -3), s0, 1).unwrap();
        assert_eq!(y1.low, -1);
        assert_eq!(y1.coeffs[0], SymPoly::monomial(bq(1, 16), vec![(Atom::r(), 1)]));
        assert_eq!(y1.coeffs[1], SymPoly::atom(Atom::C(0)));
        assert_eq!(y1.coeffs[2], SymPoly::monomial(bq(16, 1), vec![(Atom::C(1), 1)]));
        let y2 = zeta_expand(&lin(8, -2), s0, 1).unwrap();
        assert_eq!(y2.coeffs[0], SymPoly::monomial(bq(-1, 8), vec![(Atom::r(), 1)]));
        assert_eq!(y2.coeffs[2], SymPoly::monomial(bq(-8, 1), vec![(Atom::C(1), 1)]));
        let y3 = zeta_expand(&lin(8, 0), s0, 1).unwrap();
        assert_eq!(y3.low, 0);
        assert_eq!(y3.coeffs[0], SymPoly::atom(Atom::Z(Q::from_integer(2), 0)));
        assert_eq!(y3.coeffs[1], SymPoly::monomial(bq(8, 1), vec![(Atom::Z(Q::from_integer(2), 1), 1)]));
    }

    #[test]
    fn appendix_product_and_sum() {
        let s0 = Q::new(1, 4);
        let r = &SymRing;
        let y1 = zeta_expand(&lin(16, -3), s0, 2).unwrap();
        let y2 = zeta_expand(&lin(8, -2), s0, 2).unwrap();
        let y3 = zeta_expand(&lin(8, 0), s0, 2).unwrap();
        let y7 = zeta_expand(&lin(8, -1), s0, 2).unwrap();
        let a = y1.mul(&y2, r).unwrap().mul(&y3, r).unwrap();
        let (k, lead) = a.leading(r).unwrap();
        assert_eq!(k, -2);
        let z20 = Atom::Z(Q::from_integer(2), 0);
        assert_eq!(lead, SymPoly::monomial(bq(-1, 128), vec![(Atom::r(), 2), (z20.clone(), 1)]));
        let b = y1.mul(&y3, r).unwrap().mul(&y7, r).unwrap();
        let sum = a.add(&b, r).unwrap();
        let po = pole_order(&sum, &NoCertifier).unwrap();
        assert_eq!(po.order, 1);
        assert_eq!(po.leading, SymPoly::monomial(bq(1, 8), vec![(Atom::r(), 1), (Atom::C(0), 1), (z20, 1)]));
        assert_eq!(po.certificate, Certificate::Monomial);
    }

    #[test]
    fn constant_series_and_unit() {
        let s0 = Q::new(1, 3);
        let one = LaurentPoly::one(&SymRing, s0, 4);
        let y = zeta_expand(&lin(3, 0), s0, 3).unwrap();
        assert_eq!(y.mul(&one, &SymRing).unwrap(), y);
        let po = pole_order(&one, &NoCertifier).unwrap();
        assert_eq!(po.order, 0);
        assert_eq!(po.leading, SymPoly::one());
        let x = SymPoly::atom(Atom::r());
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn half_point_has_no_odd_terms() {
        let y = zeta_expand(&lin(2, 0), Q::new(1, 4), 5).unwrap();
        for (k, c) in y.coeffs.iter().enumerate() {
            assert_eq!(c.is_zero(), k % 2 == 1);
        }
    }

    #[test]
    fn mismatched_points_and_degenerate_arguments() {
        let a = zeta_expand(&lin(2, 0), Q::new(1, 4), 2).unwrap();
        let b = zeta_expand(&lin(2, 0), Q::new(1, 3), 2).unwrap();
        assert_eq!(a.mul(&b, &SymRing), Err(Error::MismatchedPoint));
        assert_eq!(zeta_expand(&lin(0, 1), Q::new(1, 3), 2), Err(Error::DegenerateArgument));
        assert_eq!(zeta_expand(&lin(0, 0), Q::new(1, 3), 2), Err(Error::DegenerateArgument));
    }

    #[test]
    fn modular_ring_agrees_with_symbolic_evaluation() {
        let s0 = Q::new(1, 4);
        let m = ModRing::new(17);
        let args = [lin(16, -3), lin(8, -2), lin(8, 0), lin(8, -1), lin(4, 1)];
        let mut sym = LaurentPoly::one(&SymRing, s0, 3);
        let mut md = Series::one(&m, s0, 3);
        for a in &args {
            let key = LocalKey::of(a, s0);
            sym = sym.mul(&expand_key(&key, s0, 3, &SymRing).unwrap(), &SymRing).unwrap();
            md = md.mul(&expand_key(&key, s0, 3, &m).unwrap(), &m).unwrap();
        }
        assert_eq!(sym.low, md.low);
        for (a, b) in sym.coeffs.iter().zip(&md.coeffs) {
            assert_eq!(a.eval_mod(&m), *b);
        }
    }

    #[test]
    fn rendering() {
        let p = SymPoly::monomial(bq(1, 8), vec![(Atom::r(), 1), (Atom::C(0), 1), (Atom::Z(Q::from_integer(2), 0), 1)]);
        assert_eq!(p.plain(), "1/8·c_{-1}·c_{0}·ζ(2)_0");
        assert_eq!(p.latex(), "\\frac{1}{8} c_{-1} c_{0} \\zeta(2)_{0}");
    }
}
