use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn workdir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("epg-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn epg(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_epg")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(text.trim()).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

const NINE: &str = "9 15\n1 2\n2 4\n3 6\n6 7\n7 8\n4 5\n1 3\n2 3\n3 4\n3 5\n5 6\n5 7\n5 8\n8 9\n5 9\n";

#[test]
fn classify_nine() {
    let d = workdir("nine");
    let g = d.join("nine.txt");
    std::fs::write(&g, NINE).unwrap();
    let (code, v) = epg(&["classify", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::json!({ "family": "maximal-outerplanar", "b": 0, "bm": 0 }));
}

#[test]
fn sun_build_then_verify() {
    let d = workdir("sun");
    let (g, r) = (d.join("s7.txt"), d.join("s7.json"));
    let (g, r) = (g.to_str().unwrap(), r.to_str().unwrap());
    assert_eq!(epg(&["gen", "--family", "nsun", "--n", "7", "-o", g]).0, 0);
    assert_eq!(epg(&["build", g, "--class", "b2m", "-o", r]).0, 0);
    let (code, v) = epg(&["verify", g, r, "--max-bends", "2", "--monotonic"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let svg = d.join("s7.svg");
    assert_eq!(epg(&["render", r, "--format", "svg", "-o", svg.to_str().unwrap()]).0, 0);
    assert!(std::fs::read_to_string(svg).unwrap().contains("<svg"));
}

#[test]
fn oracle_b0_on_c4_is_negative() {
    let d = workdir("c4");
    let g = d.join("c4.txt");
    let g = g.to_str().unwrap();
    epg(&["gen", "--family", "cycle", "--n", "4", "-o", g]);
    let (code, v) = epg(&["oracle", "b0", g]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "NONE_WITHIN_BOUND");
    let (code, v) = epg(&["oracle", "b1m", g]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "FOUND");
}

#[test]
fn every_admitted_class_round_trips() {
    let d = workdir("classes");
    let cases = [
        ("m1", vec!["--family", "m1"], vec!["b0", "b1", "b2m", "min", "min-monotonic"]),
        ("m2", vec!["--family", "m2"], vec!["b1", "b1m", "b2m", "min", "min-monotonic"]),
        ("cat", vec!["--family", "rand-cactus", "--n", "30", "--seed", "4"], vec!["b1m", "b2m", "min"]),
        ("mo", vec!["--family", "rand-maxout", "--n", "25", "--seed", "9"], vec!["b2m", "min", "min-monotonic"]),
        ("op", vec!["--family", "rand-outerplanar", "--n", "25", "--seed", "2"], vec!["b2m", "min"]),
    ];
    for (name, gen, classes) in cases {
        let g = d.join(format!("{name}.txt"));
        let g = g.to_str().unwrap();
        let mut args = vec!["gen"];
        args.extend(gen);
        args.extend(["-o", g]);
        assert_eq!(epg(&args).0, 0, "{name}");
        for class in classes {
            let r = d.join(format!("{name}-{class}.json"));
            let r = r.to_str().unwrap();
            let (code, v) = epg(&["build", g, "--class", class, "-o", r]);
            assert_eq!(code, 0, "{name} {class}: {v}");
            let k = v["max_bends"].to_string();
            let mut vargs = vec!["verify", g, r, "--max-bends", &k];
            if v["monotonic"] == true {
                vargs.push("--monotonic");
            }
            assert_eq!(epg(&vargs).0, 0, "{name} {class}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(epg(&["frobnicate"]).0, 2);
    assert_eq!(epg(&["classify", "/nonexistent/graph.txt"]).0, 3);
    let d = workdir("bad");
    let g = d.join("bad.txt");
    std::fs::write(&g, "3 2\n1 2\n").unwrap();
    assert_eq!(epg(&["classify", g.to_str().unwrap()]).0, 3);
    let m3 = d.join("m3.txt");
    let m3 = m3.to_str().unwrap();
    epg(&["gen", "--family", "m3", "-o", m3]);
    let (code, _) = epg(&["build", m3, "--class", "b0"]);
    assert_eq!(code, 1);
}
