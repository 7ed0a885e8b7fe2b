//! Executes a [`RunConfig`] and produces the requested document.

use eisenpole_core::gkfactors::verify_denominator_assumption;
use eisenpole_core::identities::identity_constant;
use eisenpole_core::poles::potential_poles;
use eisenpole_core::RootDatum;

use crate::appendix::emit_appendix_proof;
use crate::config::{Command, Format, RunConfig};
use crate::error::CliError;
use crate::json::{self, AppendixDoc, IdentitiesDoc, PolesDoc, RootDataDoc, VerifyDoc};
use crate::numerics::ZetaEngine;
use crate::parallel;
use crate::render::{self, IdentityRow};

/// Rendered output of a run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    /// Set when some result is only an upper bound or a check failed.
    pub inconclusive: bool,
}

fn unsupported(cfg: &RunConfig) -> CliError {
    CliError::Config(format!("format {:?} is not available for {:?}", cfg.format, cfg.command))
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let datum = RootDatum::new(cfg.cartan_type()?);
    let parabolics = cfg.parabolics.indices(datum.rank())?;
    parallel::with_pool(cfg.threads, || execute(cfg, &datum, &parabolics))?
}

fn execute(cfg: &RunConfig, datum: &RootDatum, parabolics: &[usize]) -> Result<Outcome, CliError> {
    let group = datum.cartan_type.to_string();
    let done = |text: String| Ok(Outcome { text, inconclusive: false });
    match cfg.command {
        Command::Rootdata => match cfg.format {
            Format::Table => done(render::rootdata_table(datum, cfg.convention)),
            Format::Latex => done(render::rootdata_latex(datum)),
            Format::Json => done(json::to_string(&RootDataDoc::new(datum, cfg.convention))?),
            Format::Dot => Err(unsupported(cfg)),
        },
        Command::Poles => {
            let engine = ZetaEngine::new(cfg.precision)?;
            let reports = parabolics
                .iter()
                .map(|&i| parallel::pole_report(datum, i, &engine))
                .collect::<Result<Vec<_>, _>>()?;
            let inconclusive = reports.iter().flat_map(|r| r.poles()).any(|e| !e.certified);
            let text = match cfg.format {
                Format::Table => render::poles_table(&reports),
                Format::Latex => render::poles_latex(&reports),
                Format::Json => json::to_string(&PolesDoc::new(&group, &reports))?,
                Format::Dot => return Err(unsupported(cfg)),
            };
            Ok(Outcome { text, inconclusive })
        }
        Command::Identities | Command::Constants => {
            let data = parallel::all_admissible(datum, cfg.range.0, cfg.range.1);
            let rows: Vec<IdentityRow> = data
                .iter()
                .filter(|d| parabolics.contains(&d.i) || parabolics.contains(&d.j))
                .map(|d| (d.clone(), identity_constant(datum, d)))
                .collect();
            let constants = cfg.command == Command::Constants;
            done(match cfg.format {
                Format::Table => render::identities_table(&rows, constants),
                Format::Latex if constants => render::constants_latex(&rows),
                Format::Latex => render::identities_latex(&rows),
                Format::Json => json::to_string(&IdentitiesDoc::new(&group, cfg.range, &rows))?,
                Format::Dot => {
                    let kept: Vec<_> = rows.iter().map(|(d, _)| d.clone()).collect();
                    render::identities_dot(&group, &kept)
                }
            })
        }
        Command::Verify => {
            let reports: Vec<_> = parabolics
                .iter()
                .flat_map(|&i| potential_poles(datum, i).into_iter().map(move |s0| (i, s0)))
                .map(|(i, s0)| verify_denominator_assumption(datum, i, s0))
                .collect();
            let inconclusive = reports.iter().any(|r| !r.violations.is_empty());
            let text = match cfg.format {
                Format::Json => json::to_string(&VerifyDoc::new(&group, &reports))?,
                Format::Table | Format::Latex => render::verify_table(&reports),
                Format::Dot => return Err(unsupported(cfg)),
            };
            Ok(Outcome { text, inconclusive })
        }
        Command::Appendix => {
            let engine = ZetaEngine::new(cfg.precision)?;
            let s0 = cfg.point.ok_or_else(|| CliError::Config("appendix needs --point".into()))?;
            let proof = emit_appendix_proof(datum, parabolics[0], s0, cfg.depth, &engine)?;
            let inconclusive = proof.entry.order > 0 && !proof.entry.certified;
            let text = match cfg.format {
                Format::Table => render::appendix_table(&proof),
                Format::Latex => render::appendix_latex(&proof),
                Format::Json => json::to_string(&AppendixDoc::new(&proof))?,
                Format::Dot => return Err(unsupported(cfg)),
            };
            Ok(Outcome { text, inconclusive })
        }
    }
}
