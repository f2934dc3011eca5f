#[path = "../../core/tests/common/synth.rs"]
mod synth;

use std::fs;
use std::io::{Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use idbench_core::model::{parse_benchmark_csv, parse_pairs_csv, read_contexts_jsonl, write_direct_ratings, write_indirect_ratings};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn idbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idbench")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = idbench(args);
    assert!(out.status.success(), "idbench {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn strdist_prints_similarity() {
    assert_eq!(ok(&["strdist", "--kind", "lv", "len", "length"]).trim(), "0.500000");
    assert_eq!(ok(&["strdist", "--kind", "nw", "len", "length"]).trim(), "0.600000");
    let bad = idbench(&["strdist", "--kind", "xx", "a", "b"]);
    assert!(!bad.status.success());
}

#[test]
fn build_writes_benchmark_files() {
    let dir = tempfile::tempdir().unwrap();
    let cohort = synth::random_cohort(5, 30, 10, 2, 20);
    let (direct, indirect) = (dir.path().join("direct.csv"), dir.path().join("indirect.csv"));
    write_direct_ratings(&cohort.direct, fs::File::create(&direct).unwrap()).unwrap();
    write_indirect_ratings(&cohort.indirect, fs::File::create(&indirect).unwrap()).unwrap();
    let out = dir.path().join("out");
    let stdout = ok(&["build", "--direct", p(&direct), "--indirect", p(&indirect), "--variant", "large", "--out", p(&out)]);
    assert!(stdout.contains("30 pairs"), "{stdout}");
    let bench = parse_benchmark_csv(fs::File::open(out.join("benchmark.csv")).unwrap()).unwrap();
    assert_eq!(bench.len(), 30);
    for name in ["relatedness.csv", "similarity.csv", "contextual_similarity.csv", "agreement.json"] {
        assert!(out.join(name).exists(), "{name}");
    }
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("agreement.json")).unwrap()).unwrap();
    assert!(report["ira_relatedness"].as_f64().unwrap() <= 1.0);

    // Explicit thresholds must come in pairs.
    let half = idbench(&["build", "--direct", p(&direct), "--indirect", p(&indirect), "--tau", "0.2", "--out", p(&out)]);
    assert!(!half.status.success());
    // Malformed input is reported, not panicked on.
    fs::write(&direct, "participant,pair_id,id1,id2,relatedness,similarity\np1,k,a,b,9,1\n").unwrap();
    let bad = idbench(&["build", "--direct", p(&direct), "--indirect", p(&indirect), "--variant", "small", "--out", p(&out)]);
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Error"));
}

#[test]
fn mining_commands() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = fixtures().join("corpus");
    let stats = dir.path().join("stats.json");
    ok(&["mine", "stats", "--corpus", p(&corpus), "--bench", p(&fixtures().join("e2e/benchmark.csv")), "--out", p(&stats)]);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(v["files"], 100);
    assert_eq!(v["total_occurrences"], 6030);

    let tokens = dir.path().join("tokens.txt");
    ok(&["mine", "tokens", "--corpus", p(&corpus), "--out", p(&tokens)]);
    assert_eq!(fs::read_to_string(&tokens).unwrap().lines().count(), 100);

    let vectors = dir.path().join("v.vec");
    ok(&["train", "--corpus", p(&tokens), "--mode", "sg", "--dim", "16", "--epochs", "3", "--min-count", "1", "--out", p(&vectors)]);
    let knn = ok(&["knn", "--vectors", p(&vectors), "--token", "width", "-k", "3"]);
    assert_eq!(knn.lines().count(), 3);

    let config = dir.path().join("sampling.json");
    fs::write(&config, r#"{"min_count": 20, "bands": [{"lo": -1.0, "hi": 0.5, "quota": 3}, {"lo": 0.5, "hi": 1.0, "quota": 5}], "random_pairs": 4, "seed": 3}"#).unwrap();
    let pairs = dir.path().join("pairs.csv");
    ok(&["mine", "sample", "--corpus", p(&corpus), "--vectors", p(&vectors), "--config", p(&config), "--out", p(&pairs)]);
    let sampled = parse_pairs_csv(fs::File::open(&pairs).unwrap()).unwrap();
    assert_eq!(sampled.len(), 12);

    let contexts = dir.path().join("contexts.jsonl");
    ok(&["mine", "contexts", "--corpus", p(&corpus), "--pairs", p(&pairs), "--n", "2", "--out", p(&contexts)]);
    let ctx = read_contexts_jsonl(std::io::BufReader::new(fs::File::open(&contexts).unwrap())).unwrap();
    assert!(!ctx.is_empty());
    assert!(ctx.iter().all(|c| c.lines.len() == 5));
}

#[test]
fn subword_vectors_cover_unseen_tokens() {
    let dir = tempfile::tempdir().unwrap();
    let tokens = dir.path().join("tokens.txt");
    ok(&["mine", "tokens", "--corpus", p(&fixtures().join("corpus")), "--out", p(&tokens)]);
    let vectors = dir.path().join("ft.vec");
    ok(&["train", "--corpus", p(&tokens), "--mode", "cbow", "--dim", "16", "--epochs", "2", "--min-count", "1", "--subword", "3,5", "--out", p(&vectors)]);
    assert!(dir.path().join("ft.vec.ngrams").exists());
    let pairs = dir.path().join("pairs.csv");
    fs::write(&pairs, "id1,id2\nwidthValue,heightValue\nqqq,width\n").unwrap();
    let out = dir.path().join("scores.csv");
    ok(&["score", "--pairs", p(&pairs), "--vectors", p(&vectors), "--out", p(&out)]);
    let text = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "id1,id2,score");
    assert!(rows[1].split(',').nth(2).unwrap().parse::<f64>().is_ok(), "{text}");
    // No n-gram of `qqq` was ever seen.
    assert!(rows[2].ends_with(','), "{text}");
}

#[test]
fn ensemble_writes_model_and_loo() {
    let dir = tempfile::tempdir().unwrap();
    let bench = fixtures().join("e2e/benchmark.csv");
    let scores = dir.path().join("scores");
    fs::create_dir(&scores).unwrap();
    for kind in ["lv", "nw"] {
        ok(&["score", "--pairs", p(&bench), "--kind", kind, "--out", p(&scores.join(format!("{kind}.csv")))]);
    }
    ok(&["score", "--pairs", p(&bench), "--vectors", p(&fixtures().join("e2e/path_based.vec")), "--out", p(&scores.join("path-based.csv"))]);
    let out = dir.path().join("ens.json");
    let stdout = ok(&[
        "ensemble", "--bench", p(&bench), "--scores-dir", p(&scores), "--dict", p(&fixtures().join("e2e/dictionary.txt")),
        "--task", "similarity", "--loo", "--out", p(&out),
    ]);
    assert!(stdout.starts_with("ensemble\t"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["task"], "similarity");
    assert_eq!(v["loo"]["predictions"].as_array().unwrap().len(), 34);
    assert!(v["model"]["regressor"]["converged"].as_bool().unwrap());
}

fn free_port() -> u16 {
    TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port()
}

fn http(port: u16, request: &str) -> Option<String> {
    let mut s = TcpStream::connect(("127.0.0.1", port)).ok()?;
    s.write_all(request.as_bytes()).ok()?;
    let mut out = String::new();
    s.read_to_string(&mut out).ok()?;
    Some(out)
}

#[test]
fn serve_answers_http() {
    let dir = tempfile::tempdir().unwrap();
    let bench = fixtures().join("e2e/benchmark.csv");
    let contexts = dir.path().join("contexts.jsonl");
    ok(&["mine", "contexts", "--corpus", p(&fixtures().join("corpus")), "--pairs", p(&bench), "--out", p(&contexts)]);
    let port = free_port();
    let mut child = Command::new(env!("CARGO_BIN_EXE_idbench"))
        .args(["serve", "--pairs", p(&bench), "--contexts", p(&contexts), "--port", &port.to_string(), "--data", p(&dir.path().join("data"))])
        .env("IDBENCH_SURVEY_SEED", "7")
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let body = r#"{"participant":"p1"}"#;
    let request = format!(
        "POST /sessions HTTP/1.1\r\nHost: x\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    );
    let deadline = Instant::now() + Duration::from_secs(20);
    let response = loop {
        if let Some(r) = http(port, &request) {
            break r;
        }
        assert!(Instant::now() < deadline, "server did not come up");
        std::thread::sleep(Duration::from_millis(50));
    };
    child.kill().unwrap();
    child.wait().unwrap();
    assert!(response.starts_with("HTTP/1.1 201"), "{response}");
    assert!(response.contains("\"session_id\""));
    assert!(response.contains("____"));
}
