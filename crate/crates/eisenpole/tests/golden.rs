//! Comparisons against the reference tables in `tests/data`.

mod common;

use std::collections::BTreeMap;

use common::{FactorKey, IdentityRow};
use eisenpole::appendix::emit_appendix_proof;
use eisenpole::parallel;
use eisenpole_core::characters::b_matrix;
use eisenpole_core::gkfactors::{residue_factor, verify_denominator_assumption};
use eisenpole_core::identities::{identity_constant, special_admissible};
use eisenpole_core::laurent::NoCertifier;
use eisenpole_core::{AdmissibleData, RootDatum, Q};

fn datum(g: &str) -> RootDatum {
    RootDatum::from_label(g).unwrap()
}

/// The computed datum matching a reference row, in the row's orientation.
fn matching(d: &RootDatum, found: &[AdmissibleData], row: &IdentityRow) -> Option<AdmissibleData> {
    let w = common::word(d, &row.w);
    let key = (row.pi - 1, row.s0, row.pj - 1, row.t0);
    found
        .iter()
        .flat_map(|a| [a.clone(), a.reversed(d)])
        .find(|a| (a.i, a.s0, a.j, a.t0) == key && a.w == w)
}

#[test]
fn b_matrices() {
    for (g, rows) in common::b_matrices() {
        assert_eq!(b_matrix(&datum(&g)).entries, rows, "{}", g);
    }
}

#[test]
fn residue_factors() {
    for (g, p, expected) in common::residue_rows() {
        assert_eq!(residue_factor(&datum(&g), p - 1), expected, "{} P{}", g, p);
    }
}

#[test]
fn special_cells_are_reproduced() {
    let cells = common::special_cells();
    let mut by_group: BTreeMap<String, Vec<(usize, usize, Q, Q)>> = BTreeMap::new();
    for (g, i, j, s, t) in cells {
        by_group.entry(g).or_default().push((i, j, s, t));
    }
    for (g, cells) in by_group {
        let d = datum(&g);
        for (i, j, s, t) in cells {
            let ours = special_admissible(&d, i - 1, j - 1);
            assert!(
                ours.iter().any(|a| a.s0 == s && a.t0 == t),
                "{} ({}, {}) -> ({}, {}) not among {:?}",
                g,
                i,
                j,
                s,
                t,
                ours.iter().map(|a| a.plain()).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn e8_pair_one_seven_is_the_only_untabulated_special_cell() {
    let d = datum("E8");
    let cells = common::special_cells();
    let tabulated: Vec<(usize, usize)> =
        cells.iter().filter(|c| c.0 == "E8").map(|c| (c.1 - 1, c.2 - 1)).collect();
    let mut extra = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            if !tabulated.contains(&(i, j)) && !tabulated.contains(&(j, i)) {
                extra.push((i, j));
            }
        }
    }
    assert_eq!(extra, vec![(0, 6)]);
    let ours = special_admissible(&d, 0, 6);
    assert!(ours.iter().any(|a| a.s0 == Q::new(1, 46) && a.t0 == Q::new(3, 38)));
}

#[test]
fn identity_rows() {
    let rows = common::identity_rows();
    for g in ["G2", "F4", "E6", "E7", "E8"] {
        let d = datum(g);
        let found = parallel::all_admissible(&d, Q::from_integer(0), Q::new(1, 2));
        for row in rows.iter().filter(|r| r.group == g) {
            let a = matching(&d, &found, row)
                .unwrap_or_else(|| panic!("{} P{} {} P{} {} {} not found", g, row.pi, row.s0, row.pj, row.t0, row.w));
            let c = identity_constant(&d, &a);
            let label = a.plain();
            assert_eq!(c.h3, row.h3, "{} h3", label);
            assert_eq!((c.d_pi, c.d_pj, c.d), (row.d_pi, row.d_pj, row.d), "{} d", label);
            assert_eq!((c.epsilon_s, c.epsilon_t), (row.eps_s, row.eps_t), "{} eps", label);
        }
    }
}

#[test]
fn identity_constants() {
    let rows = common::constant_rows();
    for g in ["G2", "F4", "E6", "E7", "E8"] {
        let d = datum(g);
        let found = parallel::all_admissible(&d, Q::from_integer(0), Q::new(1, 2));
        for row in rows.iter().filter(|r| r.group == g) {
            let key = (row.pi - 1, row.s0, row.pj - 1, row.t0);
            let a = found
                .iter()
                .flat_map(|a| [a.clone(), a.reversed(&d)])
                .find(|a| (a.i, a.s0, a.j, a.t0) == key)
                .unwrap_or_else(|| panic!("{} P{} {} P{} {} not found", g, row.pi, row.s0, row.pj, row.t0));
            let c = identity_constant(&d, &a);
            let label = a.plain();
            assert_eq!((-c.d_pi, -c.d_pj), (row.k_pi, row.k_pj), "{}", label);
            assert_eq!(c.rational, row.rational, "{}", label);
            assert_eq!(c.zeta, row.zeta, "{}", label);
        }
    }
}

#[test]
fn small_pole_tables() {
    let rows = common::pole_rows();
    for g in ["G2", "F4"] {
        let d = datum(g);
        for i in 0..d.rank() {
            let report = parallel::pole_report(&d, i, &NoCertifier).unwrap();
            let expected: Vec<_> = rows.iter().filter(|r| r.group == g && r.parabolic == i + 1).collect();
            for r in &expected {
                let e = report.entries.iter().find(|e| e.s0 == r.s0).unwrap();
                assert_eq!((e.order, e.square_integrable), (r.order, r.l2), "{} P{} {}", g, i + 1, r.s0);
                if r.order > 0 {
                    assert_eq!(e.orbit, r.orbit, "{} P{} {}", g, i + 1, r.s0);
                }
            }
            for e in report.poles() {
                assert!(expected.iter().any(|r| r.s0 == e.s0), "{} P{} {} untabulated", g, i + 1, e.s0);
            }
        }
    }
}

#[test]
fn tabulated_poles_satisfy_the_denominator_assumption() {
    for r in common::pole_rows().iter().filter(|r| r.order > 0) {
        let rep = verify_denominator_assumption(&datum(&r.group), r.parabolic - 1, r.s0);
        assert!(rep.violations.is_empty(), "{} P{} {}", r.group, r.parabolic, r.s0);
    }
}

#[test]
fn f4_appendix_factor_table() {
    let d = datum("F4");
    let expected = common::appendix_rows(&d);
    let s0 = expected[0].0;
    let proof = emit_appendix_proof(&d, 0, s0, 3, &NoCertifier).unwrap();
    assert!(proof.complete_table);
    let mut ours: Vec<FactorKey> = proof
        .rows
        .iter()
        .filter(|r| r.order > 0 || expected.iter().any(|(_, k)| k.exponent == r.exponent))
        .map(|r| FactorKey {
            order: r.order,
            word: r.word.word().to_vec(),
            numerator: r.factor.numerator.clone(),
            denominator: r.factor.denominator.clone(),
            exponent: r.exponent.clone(),
        })
        .collect();
    let mut theirs: Vec<FactorKey> = expected.into_iter().map(|(_, k)| k).collect();
    ours.sort();
    theirs.sort();
    assert_eq!(ours, theirs);
}
