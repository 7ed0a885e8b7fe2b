//! Poles of the spherical Eisenstein series `E_P(χ_{P,s})` in `Re s > 0`.
//!
//! The constant term along the Borel is `Σ_{w ∈ W(G,P)} C_w(χ_s) e^{w χ_s}`.
//! At a candidate point `s0` the cosets are grouped by the image `w·χ_{s0}`;
//! each group (an [`EquivalenceClass`]) contributes one exponential, whose
//! coefficient is the class sum of the `C_w`. The pole order at `s0` is the
//! largest pole order among those class sums.
//!
//! A class sum is put over the common denominator `D`, the max-multiplicity
//! union of the members' reduced denominators; `D` is holomorphic and nonzero
//! at `s0` whenever the denominator check of [`crate::gkfactors`] passes.
//! Numerators are expanded with [`crate::laurent`]. Factors shared by every
//! member are pulled out first, and a pair of evaluations in `F_p` locates
//! the first surviving exponent before the exact symbolic pass.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::characters::{chi_family, d_p_of_weight, AffLin, Convention};
use crate::gkfactors::{cancel, walk_cosets, ZetaProduct};
use crate::laurent::{
    big, certify, expand_key, Atom, Certificate, Certifier, CoeffRing, LaurentPoly, LocalKey, ModRing, Series, SymPoly,
    SymRing,
};
use crate::rootdata::{CosetTree, RootDatum, Series as Letter, WeylElement};
use crate::{Error, Q};

/// `η(P_i)`: the positive `s` at which some nilradical coroot pairing of the
/// plus-half family equals `0` or `1`.
pub fn potential_poles(datum: &RootDatum, i: usize) -> Vec<Q> {
    let chi = chi_family(datum, i, Convention::PlusHalf);
    let mut out = BTreeSet::new();
    for k in 0..datum.num_positive_roots() {
        if datum.positive_coroots[k][i] == 0 {
            continue;
        }
        let p = chi.pairing(datum, k);
        for target in [0, 1] {
            if let Some(s) = p.solve(Q::from_integer(target)) {
                if s > Q::from_integer(0) {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Cosets sharing the image `w·χ_{s0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub s0: Q,
    /// Shared image in the fundamental-weight basis.
    pub image: Vec<Q>,
    /// Shared image in the simple-root basis.
    pub exponent: Vec<Q>,
    /// Coset-tree node indices of the members, in breadth-first order.
    pub members: Vec<u32>,
    /// Largest pole order of an individual `C_w` among the members.
    pub max_individual: i32,
}

impl EquivalenceClass {
    pub fn representative(&self, datum: &RootDatum, tree: &CosetTree) -> WeylElement {
        datum.element(&tree.raw_word(self.members[0] as usize))
    }

    pub fn words(&self, datum: &RootDatum, tree: &CosetTree) -> Vec<WeylElement> {
        self.members.iter().map(|&m| datum.element(&tree.raw_word(m as usize))).collect()
    }

    pub fn square_integrable(&self) -> bool {
        square_integrable(&self.exponent)
    }
}

/// The Langlands criterion: every simple-root coefficient strictly negative.
pub fn square_integrable(exponent: &[Q]) -> bool {
    exponent.iter().all(|c| *c < Q::from_integer(0))
}

/// Everything computed at one candidate point before the class sums.
#[derive(Clone, Debug)]
pub struct PointData {
    pub parabolic: usize,
    pub s0: Q,
    pub tree: CosetTree,
    pub classes: Vec<EquivalenceClass>,
    /// Reduced `C_w` for every member of a class with `max_individual > 0`.
    pub factors: BTreeMap<u32, ZetaProduct>,
}

fn reduced(args: &[AffLin]) -> ZetaProduct {
    let mut num = args.to_vec();
    num.sort();
    let den: Vec<AffLin> = num.iter().map(|a| a.shift(Q::from_integer(1))).collect();
    let (n, d) = cancel(&num, &den);
    ZetaProduct { numerator: n, denominator: d, reduced: true }
}

/// Pole order at `s0` of a single reduced factor.
pub fn individual_order(f: &ZetaProduct, s0: Q) -> i32 {
    let poles = |v: &[AffLin]| v.iter().filter(|a| LocalKey::of(a, s0).is_pole()).count() as i32;
    poles(&f.numerator) - poles(&f.denominator)
}

/// Groups `W(G,P_i)` by image at `s0` and collects the factors of every
/// class that can carry a pole.
pub fn prepare_point(datum: &RootDatum, i: usize, s0: Q, tree: &CosetTree) -> PointData {
    let chi = chi_family(datum, i, Convention::PlusHalf);
    let mut groups: BTreeMap<Vec<Q>, (Vec<u32>, i32)> = BTreeMap::new();
    walk_cosets(datum, tree, &chi, |node, image, args| {
        let img: Vec<Q> = image.iter().map(|a| a.eval(s0)).collect();
        let m = individual_order(&reduced(args), s0);
        let e = groups.entry(img).or_insert_with(|| (Vec::new(), i32::MIN));
        e.0.push(node as u32);
        e.1 = e.1.max(m);
    });
    let mut wanted = BTreeSet::new();
    let mut classes: Vec<EquivalenceClass> = groups
        .into_iter()
        .map(|(image, (mut members, m))| {
            members.sort_unstable();
            if m > 0 {
                wanted.extend(members.iter().copied());
            }
            EquivalenceClass {
                s0,
                exponent: datum.weight_to_roots(&image),
                image,
                members,
                max_individual: m,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.exponent.cmp(&b.exponent));
    let mut factors = BTreeMap::new();
    if !wanted.is_empty() {
        walk_cosets(datum, tree, &chi, |node, _, args| {
            if wanted.contains(&(node as u32)) {
                factors.insert(node as u32, reduced(args));
            }
        });
    }
    PointData { parabolic: i, s0, tree: tree.clone(), classes, factors }
}

/// `equivalence_classes` for a maximal parabolic at `s0`.
pub fn equivalence_classes(datum: &RootDatum, i: usize, s0: Q) -> Vec<EquivalenceClass> {
    let tree = datum.coset_tree(datum.maximal_levi(i));
    prepare_point(datum, i, s0, &tree).classes
}

/// Pole order of one class sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassOrder {
    /// Order of the pole; `0` when the class sum is holomorphic.
    pub order: i32,
    /// Leading coefficient of the numerator `N^#` when `order > 0`.
    pub leading: Option<SymPoly>,
    pub certificate: Option<Certificate>,
}

fn keys_of(args: &[AffLin], s0: Q) -> Vec<LocalKey> {
    args.iter().map(|a| LocalKey::of(a, s0)).collect()
}

fn intersect(a: &[LocalKey], b: &[LocalKey]) -> Vec<LocalKey> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The numerator arguments of each member over the common denominator of
/// the class: `C_u = Π ζ(args_u) / Π ζ(D)`.
pub fn common_numerator_args(factors: &[&ZetaProduct]) -> Vec<Vec<AffLin>> {
    let mut d: BTreeMap<AffLin, usize> = BTreeMap::new();
    for f in factors {
        let mut local: BTreeMap<AffLin, usize> = BTreeMap::new();
        for q in &f.denominator {
            *local.entry(*q).or_default() += 1;
        }
        for (q, c) in local {
            let e = d.entry(q).or_default();
            *e = (*e).max(c);
        }
    }
    factors
        .iter()
        .map(|f| {
            let mut args = f.numerator.clone();
            for (q, &c) in &d {
                let have = f.denominator.iter().filter(|x| *x == q).count();
                for _ in have..c {
                    args.push(*q);
                }
            }
            args
        })
        .collect()
}

/// The numerators `N_u` of the members over the common denominator, as
/// sorted multisets of local keys.
pub fn common_numerators(factors: &[&ZetaProduct], s0: Q) -> Vec<Vec<LocalKey>> {
    common_numerator_args(factors)
        .iter()
        .map(|args| {
            let mut keys = keys_of(args, s0);
            keys.sort();
            keys
        })
        .collect()
}

/// `Σ mult · Π ζ(key)` truncated at exponent `trunc`.
fn sum_of_products<R: CoeffRing>(
    terms: &[(Vec<LocalKey>, i64)],
    s0: Q,
    trunc: i32,
    ring: &R,
) -> Result<Series<R::E>, Error> {
    let mut total: Option<Series<R::E>> = None;
    let mut cache: BTreeMap<(LocalKey, i32), Series<R::E>> = BTreeMap::new();
    for (keys, mult) in terms {
        let poles = keys.iter().filter(|k| k.is_pole()).count() as i32;
        let mut prod = Series::one(ring, s0, trunc + poles);
        for k in keys {
            let low = if k.is_pole() { -1 } else { 0 };
            let t = trunc + poles + low;
            let factor = match cache.entry((*k, t)) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(expand_key(k, s0, t, ring)?),
            };
            prod = prod.mul(factor, ring)?;
        }
        let m = ring.rational(&big(&Q::from_integer(*mult)));
        let prod = prod.scale(&m, ring);
        total = Some(match total {
            None => prod,
            Some(t) => t.add(&prod, ring)?,
        });
    }
    Ok(total.unwrap_or_else(|| Series { s0, low: 0, trunc, coeffs: Vec::new() }))
}

/// Laurent expansion of `Π ζ(arg)` at `s0` through exponent `trunc`.
pub fn product_series(args: &[AffLin], s0: Q, trunc: i32) -> Result<LaurentPoly, Error> {
    let mut keys = keys_of(args, s0);
    keys.sort();
    sum_of_products(&[(keys, 1)], s0, trunc, &SymRing)
}

/// Laurent expansion of the class numerator `N^# = Σ_u N_u` at `s0`.
pub fn class_series(factors: &[&ZetaProduct], s0: Q, trunc: i32) -> Result<LaurentPoly, Error> {
    let terms: Vec<(Vec<LocalKey>, i64)> = common_numerators(factors, s0).into_iter().map(|k| (k, 1)).collect();
    sum_of_products(&terms, s0, trunc, &SymRing)
}

fn first_nonzero<R: CoeffRing>(s: &Series<R::E>, ring: &R, upto: i32) -> Option<i32> {
    s.leading(ring).map(|(k, _)| k).filter(|&k| k <= upto)
}

/// Leading coefficient of `Π ζ(key)` for keys shared by all members.
fn common_leading(keys: &[LocalKey]) -> SymPoly {
    let mut p = SymPoly::one();
    for k in keys {
        let t = if k.is_pole() {
            SymPoly::monomial(big(&(Q::from_integer(1) / k.slope)), alloc::vec![(Atom::r(), 1)])
        } else {
            SymPoly::atom(Atom::Z(k.value, 0))
        };
        p = p.mul(&t);
    }
    p
}

const SEEDS: [u64; 2] = [0x2545_F491_4F6C_DD1D, 0x9E37_79B9_7F4A_7C15];

/// Pole order at `s0` of the class sum `Σ_u C_u` over the given members.
pub fn class_order(factors: &[&ZetaProduct], s0: Q, certifier: &dyn Certifier) -> Result<ClassOrder, Error> {
    let nums = common_numerators(factors, s0);
    let mut common = nums[0].clone();
    for n in &nums[1..] {
        common = intersect(&common, n);
    }
    let mut merged: BTreeMap<Vec<LocalKey>, i64> = BTreeMap::new();
    for n in &nums {
        let rest = cancel(n, &common).0;
        *merged.entry(rest).or_default() += 1;
    }
    let terms: Vec<(Vec<LocalKey>, i64)> = merged.into_iter().collect();
    let pg = common.iter().filter(|k| k.is_pole()).count() as i32;
    let upto = pg - 1;
    let ms = terms.iter().map(|(k, _)| k.iter().filter(|x| x.is_pole()).count() as i32).max().unwrap_or(0);
    let none = ClassOrder { order: 0, leading: None, certificate: None };
    if upto < -ms {
        return Ok(none);
    }
    let mut stop = None;
    for seed in SEEDS {
        let ring = ModRing::new(seed);
        let s = sum_of_products(&terms, s0, upto, &ring)?;
        if let Some(k) = first_nonzero(&s, &ring, upto) {
            stop = Some(stop.map_or(k, |x: i32| x.min(k)));
        }
    }
    let trunc = stop.unwrap_or(upto);
    let s = sum_of_products(&terms, s0, trunc, &SymRing)?;
    match s.leading(&SymRing).filter(|(k, _)| *k <= upto) {
        Some((k, c)) => {
            let leading = common_leading(&common).mul(&c);
            let certificate = certify(&leading, certifier);
            Ok(ClassOrder { order: pg - k, leading: Some(leading), certificate: Some(certificate) })
        }
        None => Ok(none),
    }
}

/// Per-class line of a [`PoleEntry`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassResult {
    pub exponent: Vec<Q>,
    pub size: usize,
    pub representative: WeylElement,
    pub max_individual: i32,
    pub order: i32,
    pub leading: Option<SymPoly>,
    pub certificate: Option<Certificate>,
    pub square_integrable: bool,
}

/// One candidate point of a [`PoleReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleEntry {
    pub s0: Q,
    /// Pole order `d` (`0` when there is no pole).
    pub order: i32,
    pub square_integrable: bool,
    pub d_p: i64,
    pub orbit: Option<String>,
    /// Nonvanishing assumptions the order relies on, such as `ζ(1/2) ≠ 0`.
    pub assumptions: Vec<String>,
    /// True when every class attaining `d` has a certified leading term.
    pub certified: bool,
    pub class_count: usize,
    /// Classes with a positive individual order, sorted by exponent.
    pub classes: Vec<ClassResult>,
}

/// Poles of `E_{P_i}` at every candidate point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleReport {
    pub group: String,
    /// One-based parabolic index.
    pub parabolic: usize,
    pub cosets: usize,
    pub entries: Vec<PoleEntry>,
}

impl PoleReport {
    pub fn poles(&self) -> impl Iterator<Item = &PoleEntry> {
        self.entries.iter().filter(|e| e.order > 0)
    }
}

/// Assembles the entry for one point from per-class orders, given in the
/// order of `point.classes` restricted to `max_individual > 0`.
pub fn assemble_entry(datum: &RootDatum, point: &PointData, orders: Vec<ClassOrder>) -> PoleEntry {
    let active: Vec<&EquivalenceClass> = point.classes.iter().filter(|c| c.max_individual > 0).collect();
    let classes: Vec<ClassResult> = active
        .iter()
        .zip(orders)
        .map(|(c, o)| ClassResult {
            exponent: c.exponent.clone(),
            size: c.members.len(),
            representative: c.representative(datum, &point.tree),
            max_individual: c.max_individual,
            order: o.order,
            leading: o.leading,
            certificate: o.certificate,
            square_integrable: c.square_integrable(),
        })
        .collect();
    let d = classes.iter().map(|c| c.order).max().unwrap_or(0).max(0);
    let attaining: Vec<&ClassResult> = classes.iter().filter(|c| d > 0 && c.order == d).collect();
    let l2 = d > 0 && attaining.iter().all(|c| c.square_integrable);
    let mut assumptions = BTreeSet::new();
    for c in &attaining {
        if let Some(lead) = &c.leading {
            for a in lead.atoms() {
                if let Atom::Z(v, 0) = a {
                    if v < Q::from_integer(1) {
                        assumptions.insert(alloc::format!("ζ({}) ≠ 0", crate::fmt_q(&v)));
                    }
                }
            }
        }
    }
    let certified = attaining
        .iter()
        .all(|c| matches!(c.certificate, Some(Certificate::Monomial) | Some(Certificate::Numeric)));
    let chi = chi_family(datum, point.parabolic, Convention::MinusHalf).eval(point.s0);
    PoleEntry {
        s0: point.s0,
        order: d,
        square_integrable: l2,
        d_p: d_p_of_weight(datum, &chi),
        orbit: if l2 { orbit_label(datum, point.parabolic, point.s0).map(String::from) } else { None },
        assumptions: assumptions.into_iter().collect(),
        certified,
        class_count: point.classes.len(),
        classes,
    }
}

/// Computes one point sequentially.
pub fn pole_entry(datum: &RootDatum, i: usize, s0: Q, tree: &CosetTree, certifier: &dyn Certifier) -> Result<PoleEntry, Error> {
    let point = prepare_point(datum, i, s0, tree);
    let mut orders = Vec::new();
    for c in point.classes.iter().filter(|c| c.max_individual > 0) {
        let fs: Vec<&ZetaProduct> = c.members.iter().map(|m| &point.factors[m]).collect();
        orders.push(class_order(&fs, s0, certifier)?);
    }
    Ok(assemble_entry(datum, &point, orders))
}

/// The full report for `P_i`, computed sequentially.
pub fn pole_report(datum: &RootDatum, i: usize, certifier: &dyn Certifier) -> Result<PoleReport, Error> {
    crate::characters::check_parabolic(datum, i)?;
    let tree = datum.coset_tree(datum.maximal_levi(i));
    let entries = potential_poles(datum, i)
        .into_iter()
        .map(|s0| pole_entry(datum, i, s0, &tree, certifier))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PoleReport { group: alloc::format!("{}", datum.cartan_type), parabolic: i + 1, cosets: tree.len(), entries })
}

/// Distinguished orbits by dimension, for the exceptional types.
fn distinguished(datum: &RootDatum) -> &'static [(usize, &'static str)] {
    let t = datum.cartan_type;
    match (t.series, t.rank) {
        (Letter::G, 2) => &[(12, "G2"), (10, "G2(a1)")],
        (Letter::F, 4) => &[(48, "F4"), (46, "F4(a1)"), (44, "F4(a2)"), (40, "F4(a3)")],
        (Letter::E, 6) => &[(72, "E6"), (70, "E6(a1)"), (66, "E6(a3)")],
        (Letter::E, 7) => &[
            (126, "E7"),
            (124, "E7(a1)"),
            (122, "E7(a2)"),
            (120, "E7(a3)"),
            (116, "E7(a4)"),
            (112, "E7(a5)"),
        ],
        (Letter::E, 8) => &[
            (240, "E8"),
            (238, "E8(a1)"),
            (236, "E8(a2)"),
            (234, "E8(a3)"),
            (232, "E8(a4)"),
            (230, "E8(b4)"),
            (228, "E8(a5)"),
            (226, "E8(b5)"),
            (224, "E8(a6)"),
            (220, "E8(b6)"),
            (208, "E8(a7)"),
        ],
        _ => &[],
    }
}

/// Weighted Dynkin diagram `2·dom(χ_{s0})` read on the dual root system,
/// when it is integral.
pub fn weighted_diagram(datum: &RootDatum, i: usize, s0: Q) -> Option<Vec<i64>> {
    let chi = chi_family(datum, i, Convention::MinusHalf).eval(s0);
    let (dom, _) = datum.dominant_representative(&chi);
    dom.iter()
        .map(|x| {
            let y = *x * 2;
            if y.is_integer() {
                Some(y.to_integer())
            } else {
                None
            }
        })
        .collect()
}

/// Label of the distinguished orbit with weighted diagram `2·dom(χ_{s0})`.
///
/// A `{0,2}` diagram is distinguished iff `dim g_0 = dim g_2`; among the
/// distinguished orbits of an exceptional group the dimension
/// `2(|Φ⁺| - #{degree 0})` is a complete invariant.
pub fn orbit_label(datum: &RootDatum, i: usize, s0: Q) -> Option<&'static str> {
    let table = distinguished(datum);
    if table.is_empty() {
        return None;
    }
    let diag = weighted_diagram(datum, i, s0)?;
    if diag.iter().any(|&x| x != 0 && x != 2) {
        return None;
    }
    let n = datum.rank();
    let mut deg0 = 0usize;
    let mut deg2 = 0usize;
    for c in &datum.positive_coroots {
        let deg: i64 = c.iter().zip(&diag).map(|(a, b)| a * b).sum();
        match deg {
            0 => deg0 += 1,
            2 => deg2 += 1,
            _ => {}
        }
    }
    if n + 2 * deg0 != deg2 {
        return None;
    }
    let dim = 2 * (datum.num_positive_roots() - deg0);
    table.iter().find(|(d, _)| *d == dim).map(|(_, l)| *l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::NoCertifier;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn candidate_sets() {
        let f4 = RootDatum::from_label("F4").unwrap();
        assert_eq!(potential_poles(&f4, 1), alloc::vec![q(1, 30), q(1, 20), q(1, 10), q(1, 5), q(3, 10), q(1, 2)]);
        let a1 = RootDatum::from_label("A1").unwrap();
        assert_eq!(potential_poles(&a1, 0), alloc::vec![q(1, 2)]);
    }

    #[test]
    fn g2_tables() {
        let g2 = RootDatum::from_label("G2").unwrap();
        let r = pole_report(&g2, 0, &NoCertifier).unwrap();
        let poles: Vec<(Q, i32, bool)> = r.poles().map(|e| (e.s0, e.order, e.square_integrable)).collect();
        assert_eq!(poles, alloc::vec![(q(1, 10), 1, true), (q(1, 2), 1, true)]);
        let r = pole_report(&g2, 1, &NoCertifier).unwrap();
        let poles: Vec<(Q, i32, bool)> = r.poles().map(|e| (e.s0, e.order, e.square_integrable)).collect();
        assert_eq!(poles, alloc::vec![(q(1, 6), 2, true), (q(1, 2), 1, true)]);
    }

    #[test]
    fn g2_classes_match_brute_force_grouping() {
        let g2 = RootDatum::from_label("G2").unwrap();
        let s0 = q(1, 6);
        let classes = equivalence_classes(&g2, 1, s0);
        let chi = chi_family(&g2, 1, Convention::PlusHalf).eval(s0);
        let reps = g2.coset_representatives(g2.maximal_levi(1));
        let mut brute: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        for w in &reps {
            *brute.entry(g2.apply(w, &chi)).or_default() += 1;
        }
        assert_eq!(classes.len(), brute.len());
        for c in &classes {
            assert_eq!(brute[&c.image], c.members.len());
        }
    }

    #[test]
    fn orbit_labels_small() {
        let g2 = RootDatum::from_label("G2").unwrap();
        assert_eq!(orbit_label(&g2, 0, q(1, 2)), Some("G2"));
        assert_eq!(orbit_label(&g2, 1, q(1, 6)), Some("G2(a1)"));
        let f4 = RootDatum::from_label("F4").unwrap();
        assert_eq!(orbit_label(&f4, 1, q(1, 10)), Some("F4(a3)"));
        let a3 = RootDatum::from_label("A3").unwrap();
        assert_eq!(orbit_label(&a3, 0, q(1, 2)), None);
    }

    #[test]
    fn trivial_exponent_rule() {
        assert!(square_integrable(&[q(-1, 1), q(-1, 1)]));
        assert!(!square_integrable(&[q(-1, 1), q(0, 1)]));
    }
}
