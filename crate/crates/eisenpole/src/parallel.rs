//! Rayon drivers for the pole and identity pipelines. Results are identical
//! to the sequential functions in `eisenpole-core` for any pool size.

use std::collections::BTreeSet;

use eisenpole_core::characters::check_parabolic;
use eisenpole_core::gkfactors::ZetaProduct;
use eisenpole_core::identities::{find_admissible_in, orient};
use eisenpole_core::laurent::Certifier;
use eisenpole_core::poles::{assemble_entry, class_order, potential_poles, prepare_point, PoleEntry};
use eisenpole_core::{AdmissibleData, Error, PoleReport, RootDatum, Q};
use rayon::prelude::*;

use crate::error::CliError;

/// Runs `f` on a pool of `threads` workers, or on the global pool when
/// `threads` is `None`.
pub fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Config(format!("thread pool: {}", e)))?;
            Ok(pool.install(f))
        }
    }
}

fn entry(datum: &RootDatum, i: usize, s0: Q, tree: &eisenpole_core::rootdata::CosetTree, certifier: &dyn Certifier) -> Result<PoleEntry, Error> {
    let point = prepare_point(datum, i, s0, tree);
    let orders = point
        .classes
        .par_iter()
        .filter(|c| c.max_individual > 0)
        .map(|c| {
            let fs: Vec<&ZetaProduct> = c.members.iter().map(|m| &point.factors[m]).collect();
            class_order(&fs, s0, certifier)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble_entry(datum, &point, orders))
}

/// Pole report of `P_i` (zero-based `i`) with points and classes in parallel.
pub fn pole_report(datum: &RootDatum, i: usize, certifier: &dyn Certifier) -> Result<PoleReport, Error> {
    check_parabolic(datum, i)?;
    let tree = datum.coset_tree(datum.maximal_levi(i));
    let entries = potential_poles(datum, i)
        .into_par_iter()
        .map(|s0| entry(datum, i, s0, &tree, certifier))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PoleReport { group: datum.cartan_type.to_string(), parabolic: i + 1, cosets: tree.len(), entries })
}

/// Pole entry at a single point.
pub fn pole_entry(datum: &RootDatum, i: usize, s0: Q, certifier: &dyn Certifier) -> Result<PoleEntry, Error> {
    check_parabolic(datum, i)?;
    let tree = datum.coset_tree(datum.maximal_levi(i));
    entry(datum, i, s0, &tree, certifier)
}

/// Oriented positive admissible data for all pairs `i < j`, searched over
/// `[lo, hi]`, sorted by `(i, j, s0, t0)`.
pub fn all_admissible(datum: &RootDatum, lo: Q, hi: Q) -> Vec<AdmissibleData> {
    let n = datum.rank();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let found: Vec<Vec<AdmissibleData>> =
        pairs.par_iter().map(|&(i, j)| find_admissible_in(datum, i, j, lo, hi, true)).collect();
    let set: BTreeSet<AdmissibleData> = found.into_iter().flatten().map(|d| orient(datum, d)).collect();
    let mut v: Vec<AdmissibleData> = set.into_iter().collect();
    v.sort_by_key(|a| (a.i, a.j, a.s0, a.t0));
    v
}
