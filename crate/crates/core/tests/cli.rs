use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_elastic-weyl"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// `(comment lines, header, rows)` of a CSV report.
fn parse_csv(text: &str) -> (Vec<String>, Vec<String>, Vec<Vec<String>>) {
    let comments = text.lines().filter(|l| l.starts_with('#')).map(String::from).collect();
    let mut rd = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header = rd.headers().unwrap().iter().map(String::from).collect();
    let rows = rd.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    (comments, header, rows)
}

fn meta(comments: &[String], key: &str) -> f64 {
    let prefix = format!("# {key}=");
    comments.iter().find_map(|c| c.strip_prefix(&prefix)).unwrap_or_else(|| panic!("no {key}")).parse().unwrap()
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("elastic-weyl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn coeffs_three_dimensional_values() {
    let o = run(&["coeffs", "--dim", "3", "--lambda", "2", "--mu", "1", "--liu"]);
    assert!(o.status.success());
    let (comments, h, rows) = parse_csv(&stdout(&o));
    assert_eq!(comments[0], "# elastic-weyl coeffs schema=1");
    let r = &rows[0];
    let get = |c: &str| r[col(&h, c)].parse::<f64>().unwrap();
    assert!((get("b_dir") + 0.0537154).abs() < 1e-6);
    assert!((get("b_free") - 0.0629989).abs() < 1e-6);
    assert!(get("liu_ratio") < 1.0);
    assert!(get("delta_free") < 1e-8);
}

#[test]
fn coeffs_alpha_sweep_grid() {
    let o = run(&["coeffs", "--alpha-sweep", "0.05:0.95:19", "--dim", "2..5"]);
    assert!(o.status.success());
    let (_, h, rows) = parse_csv(&stdout(&o));
    assert_eq!(rows.len(), 19 * 4);
    // even dimensions have no closed form
    let i = col(&h, "b_dir_odd");
    assert!(rows.iter().filter(|r| r[0] == "2").all(|r| r[i].is_empty()));
    assert!(rows.iter().filter(|r| r[0] == "3").all(|r| !r[i].is_empty()));
}

#[test]
fn shift_free_has_bound_state_plateau() {
    let o = run(&["shift", "--bc", "free", "--dim", "3", "--lambda", "2", "--mu", "1", "--grid", "400", "--check-b"]);
    assert!(o.status.success());
    let (comments, h, rows) = parse_csv(&stdout(&o));
    let bp0 = meta(&comments, "breakpoint_0");
    assert!((bp0 - 0.8696).abs() < 1e-4);
    assert_eq!(meta(&comments, "breakpoint_1"), 1.0);
    assert_eq!(meta(&comments, "breakpoint_2"), 4.0);
    let (li, si) = (col(&h, "Lambda"), col(&h, "shift"));
    for r in &rows {
        let l: f64 = r[li].parse().unwrap();
        if l >= bp0 && l < 1.0 {
            assert_eq!(r[si].parse::<f64>().unwrap(), 1.0, "Lambda = {l}");
        }
    }
    assert!(meta(&comments, "b_abs_diff") < 1e-6);
}

#[test]
fn count_disk_matches_prediction() {
    let o = run(&["count", "--model", "disk", "--bc", "dir", "--lambda", "2", "--mu", "1", "--lambda-max", "2000", "--emit-liu"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (comments, h, rows) = parse_csv(&stdout(&o));
    assert!((meta(&comments, "top_half_ratio") - 1.0).abs() < 0.05);
    assert_eq!(rows.len(), 400);
    assert_eq!(h, vec!["Lambda", "N", "residual", "prediction", "liu"]);
}

#[test]
fn count_cylinder_free_matches_prediction() {
    let o = run(&["count", "--model", "cylinder", "--h", "3.14159", "--bc", "free", "--lambda-max", "500"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (comments, _, _) = parse_csv(&stdout(&o));
    assert!((meta(&comments, "top_half_ratio") - 1.0).abs() < 0.08);
}

#[test]
fn output_is_deterministic() {
    let args = ["count", "--model", "disk", "--bc", "free", "--lambda-max", "800", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_and_cache_reuse() {
    let out = scratch("count.csv");
    let cache = scratch("disk.cache");
    let _ = std::fs::remove_file(&cache);
    let base = ["count", "--model", "disk", "--bc", "dir", "--lambda-max", "600"];
    let mut args: Vec<&str> = base.to_vec();
    let (o, c) = (out.to_str().unwrap(), cache.to_str().unwrap());
    args.extend(["--out", o, "--cache", c]);
    assert!(run(&args).status.success());
    let first = std::fs::read(&out).unwrap();
    let cached = std::fs::read_to_string(&cache).unwrap();
    assert!(cached.starts_with("# elastic-weyl-spectrum/1 lambda=2 mu=1 lambda_max=600"));
    // second run reads the cache and must give the same report
    assert!(run(&args).status.success());
    assert_eq!(std::fs::read(&out).unwrap(), first);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), cached);
}

#[test]
fn exit_codes() {
    // invalid material
    assert_eq!(run(&["coeffs", "--lambda", "-5", "--mu", "1"]).status.code(), Some(2));
    // unparsable flag
    assert_eq!(run(&["coeffs", "--dim", "x"]).status.code(), Some(2));
    // Liu curve only exists for Dirichlet
    assert_eq!(
        run(&["count", "--model", "disk", "--bc", "free", "--emit-liu", "--lambda-max", "10"]).status.code(),
        Some(2)
    );
    // Bessel argument range exceeded: numerical failure
    assert_eq!(run(&["count", "--model", "disk", "--bc", "dir", "--lambda-max", "1e12"]).status.code(), Some(3));
}
