//! Per-point pole proofs: the factor table of `W(G,P)` at `s0` and, for
//! every class where several cosets share a pole, the Laurent expansions
//! showing how far the pole cancels.

use std::collections::BTreeMap;

use eisenpole_core::characters::{chi_family, AffLin, Convention};
use eisenpole_core::gkfactors::{coset_factors, ZetaProduct};
use eisenpole_core::laurent::{zeta_expand, Certifier, SymRing};
use eisenpole_core::poles::{common_numerator_args, individual_order, potential_poles, product_series, PoleEntry};
use eisenpole_core::{LaurentPoly, RootDatum, WeylElement, Q};

use crate::error::CliError;
use crate::parallel;

/// Factor tables list every coset up to this size; beyond it only cosets
/// whose factor has a pole are listed.
pub const FULL_TABLE_LIMIT: usize = 2000;

#[derive(Clone, Debug)]
pub struct FactorRow {
    pub order: i32,
    pub word: WeylElement,
    pub factor: ZetaProduct,
    /// `w·χ_{s0}` in the simple-root basis.
    pub exponent: Vec<Q>,
}

#[derive(Clone, Debug)]
pub struct Summand {
    /// Indices into [`Expansion::symbols`].
    pub symbols: Vec<usize>,
    pub series: LaurentPoly,
}

/// The expansion narrative of one class.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub symbols: Vec<AffLin>,
    pub symbol_series: Vec<LaurentPoly>,
    /// Indices of the common denominator.
    pub denominator: Vec<usize>,
    pub summands: Vec<Summand>,
    pub total: LaurentPoly,
}

#[derive(Clone, Debug)]
pub struct ClassProof {
    pub exponent: Vec<Q>,
    pub max_individual: i32,
    pub order: i32,
    pub square_integrable: bool,
    /// Number of members with a pole of order `max_individual`.
    pub top_members: usize,
    /// Present when at least two members carry a pole.
    pub expansion: Option<Expansion>,
}

#[derive(Clone, Debug)]
pub struct AppendixProof {
    pub group: String,
    /// One-based.
    pub parabolic: usize,
    pub s0: Q,
    pub entry: PoleEntry,
    pub classes: Vec<ClassProof>,
    pub rows: Vec<FactorRow>,
    /// False when the factor table was restricted to pole-carrying cosets.
    pub complete_table: bool,
}

fn expansion(members: &[&ZetaProduct], s0: Q, depth: u32) -> Result<Expansion, CliError> {
    let args = common_numerator_args(members);
    let mut common: BTreeMap<AffLin, usize> = BTreeMap::new();
    for m in members {
        let mut local: BTreeMap<AffLin, usize> = BTreeMap::new();
        for q in &m.denominator {
            *local.entry(*q).or_default() += 1;
        }
        for (q, c) in local {
            let e = common.entry(q).or_default();
            *e = (*e).max(c);
        }
    }
    let mut symbols: Vec<AffLin> = Vec::new();
    let mut index = |a: &AffLin| match symbols.iter().position(|x| x == a) {
        Some(k) => k,
        None => {
            symbols.push(*a);
            symbols.len() - 1
        }
    };
    for a in &args[0] {
        index(a);
    }
    let mut denominator = Vec::new();
    for (q, &c) in &common {
        let k = index(q);
        denominator.extend(std::iter::repeat_n(k, c));
    }
    let mut summands = Vec::new();
    for margs in &args {
        let idx: Vec<usize> = margs.iter().map(&mut index).collect();
        summands.push(Summand { symbols: idx, series: product_series(margs, s0, -1)? });
    }
    let symbol_series = symbols.iter().map(|a| zeta_expand(a, s0, depth as i32)).collect::<Result<Vec<_>, _>>()?;
    let mut total = summands[0].series.clone();
    for s in &summands[1..] {
        total = total.add(&s.series, &SymRing)?;
    }
    Ok(Expansion { symbols, symbol_series, denominator, summands, total })
}

/// Builds the proof of the pole order of `E_{P_i}` (zero-based `i`) at `s0`.
pub fn emit_appendix_proof(
    datum: &RootDatum,
    i: usize,
    s0: Q,
    depth: u32,
    certifier: &dyn Certifier,
) -> Result<AppendixProof, CliError> {
    if !potential_poles(datum, i).contains(&s0) {
        return Err(CliError::Config(format!(
            "{} is not a potential pole of P{} in {}",
            eisenpole_core::fmt_q(&s0),
            i + 1,
            datum.cartan_type
        )));
    }
    let entry = parallel::pole_entry(datum, i, s0, certifier)?;
    let levi = datum.maximal_levi(i);
    let chi = chi_family(datum, i, Convention::PlusHalf);
    let tree = datum.coset_tree(levi);
    let all = coset_factors(datum, levi, &chi);
    let complete_table = all.len() <= FULL_TABLE_LIMIT;

    let mut by_exponent: BTreeMap<Vec<Q>, Vec<(usize, i32)>> = BTreeMap::new();
    let mut rows = Vec::new();
    for cf in &all {
        let image: Vec<Q> = cf.image.iter().map(|a| a.eval(s0)).collect();
        let exponent = datum.weight_to_roots(&image);
        let order = individual_order(&cf.factor, s0);
        by_exponent.entry(exponent.clone()).or_default().push((cf.node, order));
        if complete_table || order > 0 {
            rows.push(FactorRow { order, word: datum.element(&tree.raw_word(cf.node)), factor: cf.factor.clone(), exponent });
        }
    }
    let class_max: BTreeMap<Vec<Q>, i32> =
        by_exponent.iter().map(|(e, v)| (e.clone(), v.iter().map(|x| x.1).max().unwrap_or(0))).collect();
    rows.sort_by(|a, b| {
        (-class_max[&a.exponent], &a.exponent, -a.order, a.word.length()).cmp(&(
            -class_max[&b.exponent],
            &b.exponent,
            -b.order,
            b.word.length(),
        ))
    });

    let mut classes = Vec::new();
    for c in &entry.classes {
        let members: Vec<usize> = by_exponent[&c.exponent].iter().filter(|x| x.1 > 0).map(|x| x.0).collect();
        let top_members = by_exponent[&c.exponent].iter().filter(|x| x.1 == c.max_individual).count();
        let expansion = if members.len() > 1 {
            let fs: Vec<&ZetaProduct> = members.iter().map(|&n| &all[n].factor).collect();
            Some(expansion(&fs, s0, depth)?)
        } else {
            None
        };
        classes.push(ClassProof {
            exponent: c.exponent.clone(),
            max_individual: c.max_individual,
            order: c.order,
            square_integrable: c.square_integrable,
            top_members,
            expansion,
        });
    }
    classes.sort_by(|a, b| (-a.max_individual, &a.exponent).cmp(&(-b.max_individual, &b.exponent)));
    Ok(AppendixProof {
        group: datum.cartan_type.to_string(),
        parabolic: i + 1,
        s0,
        entry,
        classes,
        rows,
        complete_table,
    })
}
