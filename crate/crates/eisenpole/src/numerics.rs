//! High-precision values of the completed zeta function and its Taylor
//! coefficients.
//!
//! With `ψ(x) = Σ_{n≥1} e^{-πn²x}` the completed zeta function satisfies
//!
//! ```text
//! Λ(s) = 1/(s-1) - 1/s + ∫_0^∞ ψ(e^u) (e^{us/2} + e^{u(1-s)/2}) du
//! ```
//!
//! for every `s ∉ {0, 1}`. The integral and all of its `s`-derivatives are
//! evaluated with tanh-sinh quadrature on `[0, U]`; the tail beyond `U` is
//! below the working precision because `ψ(e^u)` decays like `e^{-πe^u}`.

use std::collections::HashMap;
use std::sync::Mutex;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use eisenpole_core::characters::AffLin;
use eisenpole_core::laurent::{Certifier, Series};
use eisenpole_core::{Atom, BigQ, SymPoly, Q};

use crate::error::CliError;

const RM: RoundingMode = RoundingMode::ToEven;

/// Largest `|s|` the quadrature cutoff is sized for.
const MAX_ARGUMENT: f64 = 64.0;

/// Relative size below which a certified value counts as zero.
pub const AGREEMENT_DIGITS: u32 = 30;

struct Node {
    u: BigFloat,
    /// Quadrature weight times `ψ(e^u)`.
    weight: BigFloat,
}

/// Evaluator for `Λ(s) = π^{-s/2} Γ(s/2) ζ(s)` and the formal symbols
/// `R`, `c_j`, `ζ(a)_j`.
pub struct ZetaEngine {
    digits: u32,
    prec: usize,
    nodes: Vec<Node>,
    consts: Mutex<Consts>,
    cache: Mutex<HashMap<Atom, BigFloat>>,
}

impl std::fmt::Debug for ZetaEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ZetaEngine").field("digits", &self.digits).field("nodes", &self.nodes.len()).finish()
    }
}

fn bits_for(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 96
}

impl ZetaEngine {
    /// An engine working with at least `digits` correct decimal digits.
    pub fn new(digits: u32) -> Result<Self, CliError> {
        if digits < AGREEMENT_DIGITS {
            return Err(CliError::Config(format!("precision must be at least {} digits", AGREEMENT_DIGITS)));
        }
        let prec = bits_for(digits);
        let mut cc = Consts::new().map_err(|e| CliError::Numeric(format!("{:?}", e)))?;
        let nodes = build_nodes(digits, prec, &mut cc);
        Ok(ZetaEngine { digits, prec, nodes, consts: Mutex::new(cc), cache: Mutex::new(HashMap::new()) })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn precision_bits(&self) -> usize {
        self.prec
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.prec)
    }

    pub fn rational(&self, q: &Q) -> BigFloat {
        self.int(*q.numer()).div(&self.int(*q.denom()), self.prec, RM)
    }

    pub fn big_rational(&self, q: &BigQ) -> BigFloat {
        let n = self.parse(&q.numer().to_string());
        let d = self.parse(&q.denom().to_string());
        n.div(&d, self.prec, RM)
    }

    /// Parses a decimal literal such as `1e-8`.
    pub fn parse(&self, s: &str) -> BigFloat {
        let mut cc = self.consts.lock().unwrap();
        BigFloat::parse(s, Radix::Dec, self.prec, RM, &mut cc)
    }

    /// `∂^k/∂s^k` of the quadrature part of `Λ` at `s`.
    fn integral(&self, s: &BigFloat, k: u32) -> BigFloat {
        let p = self.prec;
        let mut cc = self.consts.lock().unwrap();
        let half = BigFloat::from_f64(0.5, p);
        let one = self.int(1);
        let a = s.mul(&half, p, RM);
        let b = one.sub(s, p, RM).mul(&half, p, RM);
        let mut total = BigFloat::from_i64(0, p);
        for node in &self.nodes {
            let ea = node.u.mul(&a, p, RM).exp(p, RM, &mut cc);
            let eb = node.u.mul(&b, p, RM).exp(p, RM, &mut cc);
            let mut v = if k.is_multiple_of(2) { ea.add(&eb, p, RM) } else { ea.sub(&eb, p, RM) };
            if k > 0 {
                let x = node.u.mul(&half, p, RM).powi(k as usize, p, RM);
                v = v.mul(&x, p, RM);
            }
            total = total.add(&v.mul(&node.weight, p, RM), p, RM);
        }
        total
    }

    /// `Λ(s)` for real `s ∉ {0, 1}`.
    pub fn lambda(&self, s: &BigFloat) -> BigFloat {
        let p = self.prec;
        let one = self.int(1);
        let pole1 = one.div(&s.sub(&one, p, RM), p, RM);
        let pole0 = one.div(s, p, RM);
        pole1.sub(&pole0, p, RM).add(&self.integral(s, 0), p, RM)
    }

    /// `Λ(arg(s))`.
    pub fn lambda_affine(&self, arg: &AffLin, s: &BigFloat) -> BigFloat {
        let p = self.prec;
        let x = self.rational(&arg.a).mul(s, p, RM).add(&self.rational(&arg.b), p, RM);
        self.lambda(&x)
    }

    /// `Π Λ(arg(s))` over the given arguments.
    pub fn product(&self, args: &[AffLin], s: &BigFloat) -> BigFloat {
        args.iter().fold(self.int(1), |acc, a| acc.mul(&self.lambda_affine(a, s), self.prec, RM))
    }

    fn compute_atom(&self, atom: &Atom) -> BigFloat {
        let p = self.prec;
        let one = self.int(1);
        match atom {
            Atom::C(-1) => one,
            Atom::C(j) => {
                let j = *j as u32;
                let sign = if j.is_multiple_of(2) { self.int(-1) } else { one.clone() };
                let i = self.integral(&one, j).div(&factorial(j, p), p, RM);
                sign.add(&i, p, RM)
            }
            Atom::Z(a, j) => {
                let j = *j;
                let x = self.rational(a);
                let sign = if j % 2 == 0 { one.clone() } else { self.int(-1) };
                let t1 = sign.div(&x.sub(&one, p, RM).powi(j as usize + 1, p, RM), p, RM);
                let t0 = sign.div(&x.powi(j as usize + 1, p, RM), p, RM);
                let i = self.integral(&x, j).div(&factorial(j, p), p, RM);
                t1.sub(&t0, p, RM).add(&i, p, RM)
            }
        }
    }

    /// Numerical value of a formal symbol, with `R = 1`.
    pub fn atom(&self, atom: &Atom) -> BigFloat {
        if let Some(v) = self.cache.lock().unwrap().get(atom) {
            return v.clone();
        }
        let v = self.compute_atom(atom);
        self.cache.lock().unwrap().insert(atom.clone(), v.clone());
        v
    }

    /// Value of `p` and the sum of the absolute values of its terms.
    pub fn eval_poly(&self, poly: &SymPoly) -> (BigFloat, BigFloat) {
        let p = self.prec;
        let mut value = BigFloat::from_i64(0, p);
        let mut scale = BigFloat::from_i64(0, p);
        for (mono, c) in poly.terms() {
            let mut t = self.big_rational(c);
            for (atom, e) in mono {
                t = t.mul(&self.atom(atom).powi(*e as usize, p, RM), p, RM);
            }
            value = value.add(&t, p, RM);
            scale = scale.add(&t.abs(), p, RM);
        }
        (value, scale)
    }

    /// `Σ_k coeff_k x^k` for the retained coefficients of a series.
    pub fn eval_series(&self, series: &Series<SymPoly>, x: &BigFloat) -> BigFloat {
        let p = self.prec;
        let mut total = BigFloat::from_i64(0, p);
        for (i, c) in series.coeffs.iter().enumerate() {
            let k = series.low + i as i32;
            if k > series.trunc || c.is_zero() {
                continue;
            }
            let xk = if k >= 0 {
                x.powi(k as usize, p, RM)
            } else {
                self.int(1).div(&x.powi((-k) as usize, p, RM), p, RM)
            };
            total = total.add(&self.eval_poly(c).0.mul(&xk, p, RM), p, RM);
        }
        total
    }

    /// `log10 |a - b| - log10 |b|`, or `None` when `b` is zero.
    pub fn relative_error_log10(&self, a: &BigFloat, b: &BigFloat) -> Option<f64> {
        if b.is_zero() {
            return None;
        }
        let d = a.sub(b, self.prec, RM);
        if d.is_zero() {
            return Some(-(self.digits as f64) * 2.0);
        }
        Some(log10_abs(&d) - log10_abs(b))
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn format(&self, x: &BigFloat, digits: u32) -> String {
        let mut y = x.clone();
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 1;
        let _ = y.set_precision(bits, RM);
        let mut cc = self.consts.lock().unwrap();
        y.format(Radix::Dec, RM, &mut cc).unwrap_or_else(|_| String::from("NaN"))
    }
}

impl Certifier for ZetaEngine {
    fn nonzero(&self, poly: &SymPoly) -> Option<bool> {
        let (value, scale) = self.eval_poly(poly);
        if scale.is_zero() {
            return Some(false);
        }
        if value.is_zero() {
            return Some(false);
        }
        let rel = log10_abs(&value) - log10_abs(&scale);
        if rel > -(AGREEMENT_DIGITS as f64) {
            Some(true)
        } else if rel < -(self.digits as f64 - 10.0) {
            Some(false)
        } else {
            None
        }
    }
}

/// `log10 |x|` from the binary exponent and the leading mantissa word.
pub fn log10_abs(x: &BigFloat) -> f64 {
    let e = x.exponent().unwrap_or(0) as f64;
    let lead = x
        .mantissa_digits()
        .and_then(|m| m.last())
        .map(|w| *w as f64 / 2f64.powi(astro_float::WORD_BIT_SIZE as i32))
        .unwrap_or(0.5);
    (lead.ln() + e * std::f64::consts::LN_2) / std::f64::consts::LN_10
}

fn factorial(j: u32, p: usize) -> BigFloat {
    (1..=j as i64).fold(BigFloat::from_i64(1, p), |acc, k| acc.mul(&BigFloat::from_i64(k, p), p, RM))
}

/// `Σ_{n≥1} e^{-πn²x}`.
fn psi(x: &BigFloat, eps_log: f64, p: usize, cc: &mut Consts) -> BigFloat {
    let pi = cc.pi(p, RM);
    let q = pi.mul(x, p, RM).neg().exp(p, RM, cc);
    let q2 = q.mul(&q, p, RM);
    let mut term = q.clone();
    let mut step = q.mul(&q2, p, RM);
    let mut total = BigFloat::from_i64(0, p);
    loop {
        total = total.add(&term, p, RM);
        term = term.mul(&step, p, RM);
        step = step.mul(&q2, p, RM);
        if term.is_zero() || log10_abs(&term) < eps_log {
            break;
        }
    }
    total
}

/// Tanh-sinh nodes on `[0, U]` with the theta weight folded in.
fn build_nodes(digits: u32, p: usize, cc: &mut Consts) -> Vec<Node> {
    let target = digits as f64 + 12.0;
    let eps_log = -(target + 10.0);
    let mut upper: f64 = 1.0;
    while std::f64::consts::PI * upper.exp() < target * std::f64::consts::LN_10 + MAX_ARGUMENT * upper / 2.0 + 20.0 {
        upper += 0.25;
    }
    let level = if digits <= 60 {
        6
    } else if digits <= 140 {
        7
    } else {
        8
    };
    let h = 1.0 / f64::from(1u32 << level);
    let hb = BigFloat::from_f64(h, p);
    let ub = BigFloat::from_f64(upper, p);
    let pi = cc.pi(p, RM);
    let one = BigFloat::from_i64(1, p);
    let two = BigFloat::from_i64(2, p);
    let half_pi = pi.div(&two, p, RM);
    let mut nodes = Vec::new();
    let mut k: i64 = 0;
    loop {
        let t = BigFloat::from_i64(k, p).mul(&hb, p, RM);
        let et = t.exp(p, RM, cc);
        let eti = one.div(&et, p, RM);
        let sinh = et.sub(&eti, p, RM).div(&two, p, RM);
        let cosh = et.add(&eti, p, RM).div(&two, p, RM);
        let y = half_pi.mul(&sinh, p, RM);
        let big_e = y.mul(&two, p, RM).neg().exp(p, RM, cc);
        let denom = one.add(&big_e, p, RM);
        let w = hb
            .mul(&ub, p, RM)
            .mul(&pi, p, RM)
            .mul(&cosh, p, RM)
            .mul(&big_e, p, RM)
            .div(&denom.mul(&denom, p, RM), p, RM);
        if w.is_zero() || log10_abs(&w) < -target - 5.0 {
            break;
        }
        let u_plus = ub.div(&denom, p, RM);
        let u_minus = ub.mul(&big_e, p, RM).div(&denom, p, RM);
        let mut push = |u: BigFloat, weight: &BigFloat| {
            let x = u.exp(p, RM, cc);
            let f = psi(&x, eps_log, p, cc);
            nodes.push(Node { weight: weight.mul(&f, p, RM), u });
        };
        if k == 0 {
            push(u_plus, &w);
        } else {
            push(u_plus, &w);
            push(u_minus, &w);
        }
        k += 1;
    }
    nodes
}
