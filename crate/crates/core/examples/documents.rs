//! Reading an arrangement from JSON and producing the same report the
//! command line tool prints with `--format json`.

use bideal::cli::{execute, ArrangementDocument};

const INPUT: &str = r#"{
  "ambient_dim": 3,
  "forms": [["1", "0", "0"], ["0", "2", "0"], ["1/2", "-1/2", "0"], ["0", "0", "1"]],
  "labels": ["x", "y", "x-y", "z"]
}"#;

fn main() {
    let doc = ArrangementDocument::parse(INPUT).unwrap();
    let a = doc.to_arrangement().unwrap();
    println!("{a}");

    // Forms come back normalized: leading coefficient 1.
    let normalized = ArrangementDocument::from_arrangement(&a);
    print!("{}", normalized.to_json());
    println!("digest {}", normalized.digest());

    let path = std::env::temp_dir().join("bideal-documents-example.json");
    std::fs::write(&path, INPUT).unwrap();
    let run = execute(&["bideal", "--input", path.to_str().unwrap(), "--format", "json"]);
    std::fs::remove_file(&path).ok();
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    std::process::exit(run.status);
}
