//! End-to-end runs of the `eisenpole` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use eisenpole::json::{self, AppendixDoc, IdentitiesDoc, PolesDoc, RootDataDoc, VerifyDoc};
use eisenpole::CliError;

fn eisenpole(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisenpole"))
        .args(args)
        .env_remove("EISENPOLE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

type Reemit = fn(&str) -> Result<String, CliError>;

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn g2_poles_table() {
    let o = eisenpole(&["poles", "--group", "G2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("G2(a1)"));
    assert!(text.contains("1/10"));
    assert!(text.contains("1/6"));
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["poles", "--group", "Q7"],
        vec!["poles", "--group", "A9"],
        vec!["poles", "--group", "F4", "--parabolic", "5"],
        vec!["poles", "--group", "G2", "--precision", "10"],
        vec!["poles", "--group", "G2", "--format", "dot"],
        vec!["appendix", "--group", "F4", "--parabolic", "1"],
        vec!["appendix", "--group", "F4", "--parabolic", "1", "--point", "1/3"],
        vec!["identities", "--group", "G2", "--range", "1/2:0"],
        vec!["rootdata", "--group", "G2", "--threads", "0"],
    ] {
        let o = eisenpole(&args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"), "{:?}", args);
    }
}

#[test]
fn unwritable_output_exits_with_two() {
    let o = eisenpole(&["rootdata", "-g", "G2", "--out", "/nonexistent-dir/out.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent-dir/out.txt"));
}

#[test]
fn inconclusive_results_map_to_exit_one() {
    assert_eq!(CliError::Core(eisenpole_core::Error::Inconclusive).exit_code(), 1);
    assert_eq!(CliError::Config("x".into()).exit_code(), 2);
}

#[test]
fn out_flag_writes_the_same_text() {
    let path = scratch("g2-rootdata.txt");
    let o = eisenpole(&["rootdata", "-g", "G2", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let direct = stdout(&eisenpole(&["rootdata", "-g", "G2"]));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

#[test]
fn json_documents_round_trip_byte_for_byte() {
    let cases: Vec<(Vec<&str>, Reemit)> = vec![
        (vec!["rootdata", "-g", "F4"], json::reemit::<RootDataDoc>),
        (vec!["poles", "-g", "F4"], json::reemit::<PolesDoc>),
        (vec!["identities", "-g", "E6"], json::reemit::<IdentitiesDoc>),
        (vec!["constants", "-g", "F4"], json::reemit::<IdentitiesDoc>),
        (vec!["verify", "-g", "G2"], json::reemit::<VerifyDoc>),
        (vec!["appendix", "-g", "F4", "-p", "1", "--point", "1/4"], json::reemit::<AppendixDoc>),
    ];
    for (mut args, reemit) in cases {
        args.extend(["--format", "json"]);
        let o = eisenpole(&args);
        assert_eq!(o.status.code(), Some(0), "{:?}", args);
        let text = stdout(&o);
        assert!(text.contains("\"schema_version\": 1"));
        assert_eq!(reemit(&text).unwrap(), text, "{:?}", args);
    }
}

#[test]
fn e8_pole_json_carries_the_unverified_banner() {
    let o = eisenpole(&["poles", "-g", "E8", "-p", "8", "-f", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: PolesDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!doc.verified);
    assert!(doc.notes[0].starts_with("UNVERIFIED"));
}

#[test]
fn thread_count_does_not_change_output() {
    for args in [vec!["poles", "-g", "F4"], vec!["identities", "-g", "E6"]] {
        let one = eisenpole(&[args.as_slice(), &["--threads", "1"]].concat());
        let two = eisenpole(&[args.as_slice(), &["--threads", "2"]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(stdout(&one), stdout(&two), "{:?}", args);
    }
}

#[test]
fn environment_supplies_the_thread_count() {
    let o = Command::new(env!("CARGO_BIN_EXE_eisenpole"))
        .args(["rootdata", "-g", "G2"])
        .env("EISENPOLE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let path = scratch("f4.conf");
    std::fs::write(&path, "# F4, second parabolic\ngroup = F4\nparabolic = 2\nformat = latex\n").unwrap();
    let from_file = stdout(&eisenpole(&["poles", "--config", path.to_str().unwrap()]));
    assert!(from_file.contains("\\begin{tabular}"));
    assert!(from_file.contains("$F_4(a_3)$"));
    let direct = stdout(&eisenpole(&["poles", "-g", "F4", "-p", "2", "-f", "latex"]));
    assert_eq!(from_file, direct);
    let overridden = eisenpole(&["poles", "--config", path.to_str().unwrap(), "--format", "table", "-p", "1"]);
    assert_eq!(overridden.status.code(), Some(0));
    assert_eq!(stdout(&overridden), stdout(&eisenpole(&["poles", "-g", "F4", "-p", "1"])));
}

#[test]
fn dot_export_lists_chains() {
    let o = eisenpole(&["identities", "-g", "E6", "-f", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph"));
    assert!(text.contains("P4"));
}

#[test]
fn appendix_latex_shows_the_cancellation() {
    let o = eisenpole(&["appendix", "-g", "F4", "-p", "1", "--point", "1/4", "-f", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\\begin{longtable}"));
    assert!(text.contains("\\frac{\\zeta(8s-2)\\zeta(8s)\\zeta(16s-3)}{\\zeta(8s+1)\\zeta(8s+4)\\zeta(16s+4)}"));
}
