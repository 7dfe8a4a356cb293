//! Driving the `twc` front end programmatically and reading its JSON report.
//!
//! Run with `cargo run --example cli_report`.

use twc::cli::{run, Report};

fn main() -> twc::Result<()> {
    for args in [
        vec!["permanent", "--fixture", "b1-3-3-remark-selection"],
        vec!["check", "12", "path:5"],
        vec!["check", "12", "cycle:3"],
        vec!["pind", "B", "cycle:4", "--max", "2", "--method", "exhaustive"],
    ] {
        let (code, report, _) = run(args.iter().copied());
        println!("$ twc {} -> exit {code}\n{}", args.join(" "), report.text);
    }
    let (_, report, _) = run(["classify", "b2:3,3,2", "--json"]);
    let json = report.to_json();
    assert_eq!(Report::from_json(&json)?.to_json(), json);
    println!("classify report round-trips ({} bytes)", json.len());
    Ok(())
}
