use std::process::{Command, Output};

fn cyclo4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclo4")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn seq_text_and_json() {
    let o = cyclo4(&["seq", "--p", "5"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0021323120\n"));
    let o = cyclo4(&["seq", "--p", "7", "--format", "json"]);
    assert_eq!(stdout(&o), "[0,0,2,1,2,1,3,2,2,0,3,0,3,1]\n");
}

#[test]
fn json_round_trips() {
    for args in [
        &["classes", "--p", "5", "--format", "json"][..],
        &["lc", "--p", "7", "--method", "brute", "--format", "json"],
        &["verify", "--p", "17", "--format", "json"],
        &["sweep", "--from", "3", "--to", "30", "--format", "json"],
    ] {
        let out = stdout(&cyclo4(args));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string(&v).unwrap()), out, "{args:?}");
    }
}

#[test]
fn lc_methods() {
    assert_eq!(stdout(&cyclo4(&["lc", "--p", "41", "--method", "theorem"])), "22\n");
    let o = cyclo4(&["lc", "--p", "3", "--method", "brute"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "5");
    assert_eq!(lines[1].split(',').count(), 6);
    assert_eq!(cyclo4(&["lc", "--p", "11", "--method", "brute"]).status.code(), Some(1));
}

#[test]
fn verify_lines_and_filter() {
    let o = cyclo4(&["verify", "--p", "7"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let status = line.split(' ').nth(1).unwrap();
        assert!(["PASS", "SKIP"].contains(&status), "{line}");
    }
    let o = cyclo4(&["verify", "--p", "7", "--lemmas", "s0-quadratic,s0-value"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = cyclo4(&["verify", "--p", "7", "--checks", "nonsense"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn expansion_cap_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_cyclo4"))
        .args(["verify", "--p", "17", "--checks", "factorization"])
        .env("CYCLO4_EXPANSION_CAP", "10")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("factorization SKIP"), "{}", stdout(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_cyclo4"))
        .args(["verify", "--p", "17"])
        .env("CYCLO4_EXPANSION_CAP", "ten")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invalid_input_exits_1() {
    for args in [
        &["classes", "--p", "4"][..],
        &["verify", "--p", "2"],
        &["sweep", "--from", "10", "--to", "3"],
        &["seq", "--p", "5", "--format", "csv"],
        &["frobnicate"],
    ] {
        assert_eq!(cyclo4(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(cyclo4(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_to_file() {
    let dir = std::env::temp_dir().join(format!("cyclo4-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let o = cyclo4(&["sweep", "--from", "3", "--to", "50", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "14 primes, 0 mismatches\n");
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,residue_class,r,lc_theorem,lc_reeds_sloane,match,elapsed_ms"));
    let row17 = lines.find(|l| l.starts_with("17,")).unwrap();
    assert!(row17.starts_with("17,1 mod 16,8,18,18,true,"), "{row17}");
    std::fs::remove_dir_all(&dir).unwrap();

    let bad = cyclo4(&["sweep", "--from", "3", "--to", "5", "--out", "/nonexistent/dir/x.csv"]);
    assert_eq!(bad.status.code(), Some(1));
}
