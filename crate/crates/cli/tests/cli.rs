use std::path::PathBuf;
use std::process::Command;

use tempfile::TempDir;
use unicyclic_ga_cli::{run, ComputeReport, EXIT_INPUT, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("unicyclic-ga").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const PAW: &str = "4 4\n0 1\n1 2\n2 0\n0 3\n";

#[test]
fn compute_paw() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "paw.txt", PAW);
    let r = cli(&["compute", p.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("GA = 3.825617198"));
    assert!(r.stdout.contains("AG = 4.195941991"));
    assert!(r.stdout.contains("unicyclic, girth 3"));

    let j = cli(&["compute", p.to_str().unwrap(), "--format", "json"]);
    let report: ComputeReport = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(report.girth, Some(3));
    assert!((report.ga - 3.8256).abs() < 5e-5);
    // sorted by degree ratio
    assert!(report.edges.windows(2).all(|w| w[0].rd <= w[1].rd));
    assert_eq!(report.edges.last().unwrap().edge, (0, 3));
}

#[test]
fn compute_c7() {
    let dir = TempDir::new().unwrap();
    let text = "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n";
    let p = write(&dir, "c7.txt", text);
    let r = cli(&["compute", p.to_str().unwrap()]);
    assert!(r.stdout.contains("GA = 7.000000000"));
    let csv = cli(&["compute", p.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(csv.stdout.lines().count(), 8);
    assert!(csv.stdout.starts_with("u,v,du,dv,rd,ga\n0,1,2,2,1.000000000,1.000000000\n"));
}

#[test]
fn compute_errors_and_warnings() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n1 x\n");
    let r = cli(&["compute", bad.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.stderr.contains("line 3"));

    let missing = cli(&["compute", dir.path().join("nope.txt").to_str().unwrap()]);
    assert_eq!(missing.code, EXIT_INPUT);

    let split = write(&dir, "split.txt", "6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
    let r = cli(&["compute", split.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stderr.contains("warning: input graph is disconnected"));
    assert!(r.stdout.contains("not unicyclic"));
}

#[test]
fn tables_defaults() {
    let t1 = cli(&["tables", "1", "--format", "csv"]);
    assert_eq!(t1.code, EXIT_OK);
    let lines: Vec<&str> = t1.stdout.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "p,A(p,2),B(p,2),A(p,3),B(p,3),A(p,4),B(p,4)");
    assert!(lines[6].starts_with("7,1.0036,1.4957,1.2853,1.4750,"));

    let t2 = cli(&["tables", "2", "--format", "csv"]);
    let lines: Vec<&str> = t2.stdout.lines().collect();
    assert_eq!(lines.len(), 13);
    assert!(lines[1].starts_with("2,0.4006,1.1536,"));
    assert!(lines[12].starts_with("13,1.0218,1.1750,1.3842,1.2139,1.6829,1.2397,1.9343,1.2575"));
}

#[test]
fn tables_beyond_printed_range() {
    let r = cli(&["tables", "1", "--rows", "5..8", "--cols", "5", "--format", "csv"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout.lines().next().unwrap(), "p,A(p,5),B(p,5)");
    assert_eq!(r.stdout.lines().count(), 5);
    let bad = cli(&["tables", "2", "--cols", "0..3"]);
    assert_eq!(bad.code, EXIT_USAGE);
    assert_eq!(cli(&["tables", "3"]).code, EXIT_USAGE);
    assert_eq!(cli(&["tables", "1", "--rows", "7..2"]).code, EXIT_USAGE);
}

#[test]
fn reduce_commands() {
    let dir = TempDir::new().unwrap();
    let sn3 = write(&dir, "sn3.txt", "6 6\n0 1\n1 2\n2 0\n0 3\n0 4\n0 5\n");
    let r = cli(&["reduce", sn3.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.trim_end().ends_with("terminal: S_{6;3} GA 5.043083783"));
    for line in r.stdout.lines().filter(|l| l.starts_with("step")) {
        let (before, after) = line.rsplit_once(" -> ").unwrap();
        assert_eq!(before.rsplit_once(' ').unwrap().1, after);
    }

    let g8 = write(&dir, "g8.txt", "8 8\n0 1\n1 2\n2 3\n3 0\n1 4\n4 5\n2 6\n6 7\n");
    let j = cli(&["reduce", g8.to_str().unwrap(), "--format", "json"]);
    assert_eq!(j.code, EXIT_OK);
    let trace: unicyclic_ga::TransformTrace = serde_json::from_str(&j.stdout).unwrap();
    assert!(trace.validate().is_ok());
    assert!(trace.terminal_ga <= trace.input_ga);

    let verbose = cli(&["reduce", g8.to_str().unwrap(), "--trace"]);
    assert!(verbose.stdout.contains("  edges: "));

    let tree = write(&dir, "tree.txt", "4 3\n0 1\n1 2\n2 3\n");
    let t = cli(&["reduce", tree.to_str().unwrap()]);
    assert_eq!(t.code, EXIT_INPUT);
    assert!(t.stderr.contains("not unicyclic"));

    let paw = write(&dir, "paw.txt", PAW);
    let small = cli(&["reduce", paw.to_str().unwrap()]);
    assert_eq!(small.code, EXIT_OK);
    assert!(small.stdout.contains("paw"));
}

#[test]
fn family_command() {
    let r = cli(&["family", "spq4", "3", "2"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.starts_with("S_{3,2;4} (n = 9)\nGA (closed form) = 7.528701866\n"));
    assert_eq!(cli(&["family", "sn3", "2"]).code, EXIT_USAGE);
    assert_eq!(cli(&["family", "cycle", "5", "--format", "csv"]).code, EXIT_USAGE);
    let j = cli(&["family", "srk3", "2", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["spec"]["family"], "srk3");
    assert_eq!(v["n"], 6);
}

#[test]
fn verify_commands() {
    let r = cli(&["verify", "5"]);
    assert_eq!(r.code, EXIT_OK);
    let row = r.stdout.lines().nth(1).unwrap();
    let fields: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(&fields[..2], &["5", "5"]);
    assert_eq!(*fields.last().unwrap(), "0");

    let all = cli(&["verify", "3..9", "--format", "csv"]);
    assert_eq!(all.code, EXIT_OK);
    assert_eq!(all.stdout.lines().count(), 8);
    assert!(all.stdout.lines().skip(1).all(|l| l.ends_with(",0")));

    let big = cli(&["verify", "40"]);
    assert_eq!(big.code, EXIT_USAGE);
    assert!(big.stderr.contains("range too large"));
    assert_eq!(cli(&["verify", "2..5"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "5", "--tol", "-1"]).code, EXIT_USAGE);
}

fn reserialize<T: serde::de::DeserializeOwned + serde::Serialize>(json: &str) -> String {
    let value: T = serde_json::from_str(json).unwrap();
    let mut again = serde_json::to_string_pretty(&value).unwrap();
    again.push('\n');
    again
}

#[test]
fn json_reports_round_trip() {
    use unicyclic_ga::enumerate::BoundReport;
    use unicyclic_ga_cli::{FamilyReport, TableReport};

    let dir = TempDir::new().unwrap();
    let p = write(&dir, "paw.txt", PAW);
    let g = write(&dir, "g.txt", "7 7\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n2 6\n");
    let compute = cli(&["compute", p.to_str().unwrap(), "--format", "json"]).stdout;
    assert_eq!(reserialize::<ComputeReport>(&compute), compute);
    let verify = cli(&["verify", "3..7", "--format", "json"]).stdout;
    assert_eq!(reserialize::<Vec<BoundReport>>(&verify), verify);
    let table = cli(&["tables", "2", "--format", "json"]).stdout;
    assert_eq!(reserialize::<TableReport>(&table), table);
    let family = cli(&["family", "sn3", "7", "--format", "json"]).stdout;
    assert_eq!(reserialize::<FamilyReport>(&family), family);
    let reduce = cli(&["reduce", g.to_str().unwrap(), "--format", "json"]).stdout;
    assert_eq!(reserialize::<unicyclic_ga::TransformTrace>(&reduce), reduce);
}

#[test]
fn output_is_byte_stable() {
    for args in [vec!["verify", "3..8"], vec!["tables", "1"], vec!["family", "srk3", "4", "2"]] {
        assert_eq!(cli(&args).stdout, cli(&args).stdout);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("t1.csv");
    let r = cli(&["tables", "1", "--format", "csv", "--out", target.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written, cli(&["tables", "1", "--format", "csv"]).stdout);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&[]).code, EXIT_USAGE);
    assert_eq!(cli(&["compute"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "5", "--format", "xml"]).code, EXIT_USAGE);
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("Usage: unicyclic-ga"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_unicyclic-ga");
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "1 x\n");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = code(&["verify", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("count"));
    assert_eq!(code(&["verify", "40"]).status.code(), Some(1));
    assert_eq!(code(&["compute", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(code(&["bogus"]).status.code(), Some(1));
}
