//! Versioned JSON documents. Rationals are strings such as `"1/4"`, Weyl
//! elements are compact words such as `"w2w3w1"`, and symbolic expressions
//! use their plain-text rendering, so every document re-serializes to the
//! same bytes after a parse.

use serde::{Deserialize, Serialize};

use eisenpole_core::characters::{b_matrix, chi_family, delta_coefficient, Convention};
use eisenpole_core::gkfactors::{residue_factor, DenominatorReport};
use eisenpole_core::{fmt_q, PoleReport, RootDatum, Q};

use crate::appendix::AppendixProof;
use crate::error::CliError;
use crate::render::{IdentityRow, SPHERICAL_NOTE, UNVERIFIED_BANNER};

pub const SCHEMA_VERSION: u32 = 1;

fn qs(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicDoc {
    pub index: usize,
    pub cosets: usize,
    pub b: i64,
    pub character: Vec<String>,
    pub residue_factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDataDoc {
    pub schema_version: u32,
    pub group: String,
    pub rank: usize,
    pub weyl_order: u64,
    pub positive_roots: usize,
    pub cartan: Vec<Vec<i64>>,
    pub b_matrix: Vec<Vec<i64>>,
    pub convention: String,
    pub parabolics: Vec<ParabolicDoc>,
}

impl RootDataDoc {
    pub fn new(datum: &RootDatum, convention: Convention) -> Self {
        RootDataDoc {
            schema_version: SCHEMA_VERSION,
            group: datum.cartan_type.to_string(),
            rank: datum.rank(),
            weyl_order: datum.weyl_order(),
            positive_roots: datum.num_positive_roots(),
            cartan: datum.cartan.clone(),
            b_matrix: b_matrix(datum).entries,
            convention: convention.name().to_string(),
            parabolics: (0..datum.rank())
                .map(|i| ParabolicDoc {
                    index: i + 1,
                    cosets: datum.coset_tree(datum.maximal_levi(i)).len(),
                    b: delta_coefficient(datum, i),
                    character: chi_family(datum, i, convention).coords().iter().map(|a| a.to_string()).collect(),
                    residue_factor: residue_factor(datum, i).plain(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub exponent: Vec<String>,
    pub size: usize,
    pub representative: String,
    pub max_individual: i32,
    pub order: i32,
    pub leading: Option<String>,
    pub certificate: Option<String>,
    pub square_integrable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub s0: String,
    pub order: i32,
    pub square_integrable: bool,
    pub d_p: i64,
    pub orbit: Option<String>,
    pub assumptions: Vec<String>,
    pub certified: bool,
    pub class_count: usize,
    pub classes: Vec<ClassDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleReportDoc {
    pub parabolic: usize,
    pub cosets: usize,
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolesDoc {
    pub schema_version: u32,
    pub group: String,
    pub verified: bool,
    pub notes: Vec<String>,
    pub reports: Vec<PoleReportDoc>,
}

impl PolesDoc {
    pub fn new(group: &str, reports: &[PoleReport]) -> Self {
        let verified = group != "E8";
        let mut notes = vec![SPHERICAL_NOTE.to_string()];
        if !verified {
            notes.insert(0, UNVERIFIED_BANNER.to_string());
        }
        PolesDoc {
            schema_version: SCHEMA_VERSION,
            group: group.to_string(),
            verified,
            notes,
            reports: reports
                .iter()
                .map(|r| PoleReportDoc {
                    parabolic: r.parabolic,
                    cosets: r.cosets,
                    entries: r
                        .entries
                        .iter()
                        .map(|e| EntryDoc {
                            s0: fmt_q(&e.s0),
                            order: e.order,
                            square_integrable: e.square_integrable,
                            d_p: e.d_p,
                            orbit: e.orbit.clone(),
                            assumptions: e.assumptions.clone(),
                            certified: e.certified,
                            class_count: e.class_count,
                            classes: e
                                .classes
                                .iter()
                                .map(|c| ClassDoc {
                                    exponent: qs(&c.exponent),
                                    size: c.size,
                                    representative: c.representative.compact(),
                                    max_individual: c.max_individual,
                                    order: c.order,
                                    leading: c.leading.as_ref().map(|p| p.plain()),
                                    certificate: c.certificate.map(|x| x.name().to_string()),
                                    square_integrable: c.square_integrable,
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDoc {
    pub pi: usize,
    pub s0: String,
    pub pj: usize,
    pub t0: String,
    pub w: String,
    pub special: bool,
    pub h3: String,
    pub d_pi: i64,
    pub d_pj: i64,
    pub d: i64,
    pub epsilon_s: String,
    pub epsilon_t: String,
    pub a_ratio: String,
    pub rational: String,
    pub zeta: String,
    pub constant: String,
    pub assumptions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitiesDoc {
    pub schema_version: u32,
    pub group: String,
    pub range: [String; 2],
    pub data: Vec<IdentityDoc>,
    /// Connected components, as `P<i> <s>` labels.
    pub chains: Vec<Vec<String>>,
}

impl IdentitiesDoc {
    pub fn new(group: &str, range: (Q, Q), rows: &[IdentityRow]) -> Self {
        let data: Vec<_> = rows.iter().map(|(a, _)| a.clone()).collect();
        IdentitiesDoc {
            schema_version: SCHEMA_VERSION,
            group: group.to_string(),
            range: [fmt_q(&range.0), fmt_q(&range.1)],
            data: rows
                .iter()
                .map(|(a, c)| IdentityDoc {
                    pi: a.i + 1,
                    s0: fmt_q(&a.s0),
                    pj: a.j + 1,
                    t0: fmt_q(&a.t0),
                    w: a.w.compact(),
                    special: a.special,
                    h3: c.h3.plain(),
                    d_pi: c.d_pi,
                    d_pj: c.d_pj,
                    d: c.d,
                    epsilon_s: fmt_q(&c.epsilon_s),
                    epsilon_t: fmt_q(&c.epsilon_t),
                    a_ratio: c.a_ratio.plain(),
                    rational: fmt_q(&c.rational),
                    zeta: c.zeta.plain(),
                    constant: c.plain(),
                    assumptions: c.assumptions.clone(),
                })
                .collect(),
            chains: eisenpole_core::identities::chains(&data)
                .iter()
                .map(|ch| ch.iter().map(|(p, s)| format!("P{} {}", p + 1, fmt_q(s))).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub word: String,
    pub argument: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorDoc {
    pub parabolic: usize,
    pub s0: String,
    pub cosets: usize,
    pub violations: Vec<ViolationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub schema_version: u32,
    pub group: String,
    pub reports: Vec<DenominatorDoc>,
}

impl VerifyDoc {
    pub fn new(group: &str, reports: &[DenominatorReport]) -> Self {
        VerifyDoc {
            schema_version: SCHEMA_VERSION,
            group: group.to_string(),
            reports: reports
                .iter()
                .map(|r| DenominatorDoc {
                    parabolic: r.parabolic + 1,
                    s0: fmt_q(&r.s0),
                    cosets: r.cosets,
                    violations: r
                        .violations
                        .iter()
                        .map(|v| ViolationDoc {
                            word: v.word.compact(),
                            argument: v.argument.to_string(),
                            value: fmt_q(&v.value),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRowDoc {
    pub order: i32,
    pub word: String,
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub exponent: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProofDoc {
    pub exponent: Vec<String>,
    pub max_individual: i32,
    pub order: i32,
    pub square_integrable: bool,
    pub symbols: Vec<String>,
    pub summands: Vec<String>,
    pub total: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixDoc {
    pub schema_version: u32,
    pub group: String,
    pub parabolic: usize,
    pub s0: String,
    pub order: i32,
    pub square_integrable: bool,
    pub assumptions: Vec<String>,
    pub complete_table: bool,
    pub classes: Vec<ClassProofDoc>,
    pub rows: Vec<FactorRowDoc>,
}

impl AppendixDoc {
    pub fn new(p: &AppendixProof) -> Self {
        AppendixDoc {
            schema_version: SCHEMA_VERSION,
            group: p.group.clone(),
            parabolic: p.parabolic,
            s0: fmt_q(&p.s0),
            order: p.entry.order,
            square_integrable: p.entry.square_integrable,
            assumptions: p.entry.assumptions.clone(),
            complete_table: p.complete_table,
            classes: p
                .classes
                .iter()
                .map(|c| ClassProofDoc {
                    exponent: qs(&c.exponent),
                    max_individual: c.max_individual,
                    order: c.order,
                    square_integrable: c.square_integrable,
                    symbols: c
                        .expansion
                        .as_ref()
                        .map(|x| x.symbols.iter().map(|a| a.to_string()).collect())
                        .unwrap_or_default(),
                    summands: c
                        .expansion
                        .as_ref()
                        .map(|x| x.summands.iter().map(|m| m.series.plain()).collect())
                        .unwrap_or_default(),
                    total: c.expansion.as_ref().map(|x| x.total.plain()),
                })
                .collect(),
            rows: p
                .rows
                .iter()
                .map(|r| FactorRowDoc {
                    order: r.order,
                    word: r.word.compact(),
                    numerator: r.factor.numerator.iter().map(|a| a.to_string()).collect(),
                    denominator: r.factor.denominator.iter().map(|a| a.to_string()).collect(),
                    exponent: qs(&r.exponent),
                })
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

/// Parses a document and serializes it again.
pub fn reemit<T: Serialize + for<'de> Deserialize<'de>>(text: &str) -> Result<String, CliError> {
    let doc: T = serde_json::from_str(text)?;
    to_string(&doc)
}
