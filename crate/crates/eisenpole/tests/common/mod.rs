//! Readers for the reference tables under `tests/data`.

#![allow(dead_code)]

use std::path::PathBuf;

use eisenpole_core::{parse_q, AffLin, ResidueFactor, RootDatum, WeylElement, Q};

pub fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e))
}

fn rows(name: &str) -> Vec<Vec<String>> {
    data(name)
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect()
}

pub fn rat(s: &str) -> Q {
    parse_q(s).unwrap_or_else(|| panic!("bad rational `{}`", s))
}

fn rat_list(s: &str) -> Vec<Q> {
    let inner = s.trim_start_matches('[').trim_end_matches(']');
    let mut v: Vec<Q> = inner.split(',').filter(|x| !x.is_empty()).map(rat).collect();
    v.sort();
    v
}

/// `R<k> [num] [den]` starting at column `at`.
fn residue(cols: &[String], at: usize) -> ResidueFactor {
    ResidueFactor {
        power_of_r: cols[at].trim_start_matches('R').parse().unwrap(),
        numerator: rat_list(&cols[at + 1]),
        denominator: rat_list(&cols[at + 2]),
    }
}

/// A one-based digit word such as `4312`, or `e` for the identity.
pub fn word(datum: &RootDatum, s: &str) -> WeylElement {
    if s == "e" {
        return WeylElement::identity();
    }
    let letters: Vec<u8> = s.bytes().map(|b| b - b'1').collect();
    datum.element(&letters)
}

/// `16s-3`, `8s`, `-s+1` or a constant.
pub fn affine(s: &str) -> AffLin {
    match s.find('s') {
        None => AffLin::constant(rat(s)),
        Some(k) => {
            let a = match &s[..k] {
                "" => Q::from_integer(1),
                "-" => Q::from_integer(-1),
                c => rat(c),
            };
            let rest = s[k + 1..].trim_start_matches('+');
            let b = if rest.is_empty() { Q::from_integer(0) } else { rat(rest) };
            AffLin::new(a, b)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleRow {
    pub group: String,
    /// One-based.
    pub parabolic: usize,
    pub s0: Q,
    pub order: i32,
    pub l2: bool,
    pub orbit: Option<String>,
}

pub fn pole_rows() -> Vec<PoleRow> {
    rows("pole_tables.txt")
        .into_iter()
        .map(|c| PoleRow {
            group: c[0].clone(),
            parabolic: c[1].parse().unwrap(),
            s0: rat(&c[2]),
            order: c[3].parse().unwrap(),
            l2: c[4] == "1",
            orbit: (c[5] != "-").then(|| c[5].clone()),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct IdentityRow {
    pub group: String,
    pub pi: usize,
    pub s0: Q,
    pub pj: usize,
    pub t0: Q,
    pub w: String,
    pub h3: ResidueFactor,
    pub d_pi: i64,
    pub d_pj: i64,
    pub d: i64,
    pub eps_s: Q,
    pub eps_t: Q,
}

pub fn identity_rows() -> Vec<IdentityRow> {
    rows("identity_rows.txt")
        .into_iter()
        .map(|c| IdentityRow {
            group: c[0].clone(),
            pi: c[1].parse().unwrap(),
            s0: rat(&c[2]),
            pj: c[3].parse().unwrap(),
            t0: rat(&c[4]),
            w: c[5].clone(),
            h3: residue(&c, 6),
            d_pi: c[9].parse().unwrap(),
            d_pj: c[10].parse().unwrap(),
            d: c[11].parse().unwrap(),
            eps_s: rat(&c[12]),
            eps_t: rat(&c[13]),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ConstantRow {
    pub group: String,
    pub pi: usize,
    pub s0: Q,
    pub pj: usize,
    pub t0: Q,
    pub k_pi: i64,
    pub k_pj: i64,
    pub rational: Q,
    pub zeta: ResidueFactor,
}

pub fn constant_rows() -> Vec<ConstantRow> {
    rows("identity_constants.txt")
        .into_iter()
        .map(|c| ConstantRow {
            group: c[0].clone(),
            pi: c[1].parse().unwrap(),
            s0: rat(&c[2]),
            pj: c[3].parse().unwrap(),
            t0: rat(&c[4]),
            k_pi: c[5].parse().unwrap(),
            k_pj: c[6].parse().unwrap(),
            rational: rat(&c[7]),
            zeta: residue(&c, 8),
        })
        .collect()
}

pub fn b_matrices() -> Vec<(String, Vec<Vec<i64>>)> {
    rows("b_matrices.txt")
        .into_iter()
        .map(|c| {
            let m = c[1].split(';').map(|r| r.split(',').map(|x| x.parse().unwrap()).collect()).collect();
            (c[0].clone(), m)
        })
        .collect()
}

pub fn residue_rows() -> Vec<(String, usize, ResidueFactor)> {
    rows("residue_factors.txt").into_iter().map(|c| (c[0].clone(), c[1].parse().unwrap(), residue(&c, 2))).collect()
}

/// `(group, i, j, s, t)` with one-based indices.
pub fn special_cells() -> Vec<(String, usize, usize, Q, Q)> {
    rows("special_cells.txt")
        .into_iter()
        .map(|c| (c[0].clone(), c[1].parse().unwrap(), c[2].parse().unwrap(), rat(&c[3]), rat(&c[4])))
        .collect()
}

/// One row of a factor table, with both sides as sorted multisets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorKey {
    pub order: i32,
    pub word: Vec<u8>,
    pub numerator: Vec<AffLin>,
    pub denominator: Vec<AffLin>,
    pub exponent: Vec<Q>,
}

pub fn appendix_rows(datum: &RootDatum) -> Vec<(Q, FactorKey)> {
    let list = |s: &str| -> Vec<AffLin> {
        let mut v: Vec<AffLin> = if s == "-" { Vec::new() } else { s.split(';').map(affine).collect() };
        v.sort();
        v
    };
    rows("appendix_f4_p1.txt")
        .into_iter()
        .map(|c| {
            let key = FactorKey {
                order: c[1].parse().unwrap(),
                word: word(datum, &c[2]).word().to_vec(),
                numerator: list(&c[3]),
                denominator: list(&c[4]),
                exponent: c[5].split(',').map(rat).collect(),
            };
            (rat(&c[0]), key)
        })
        .collect()
}
