//! Analyzes a deformation given in the text file format.

use crsphere::suite::{analyze_text, AnalyzeOptions};

const INPUT: &str = "\
# pure mode m = -5 on S^3
dimension 1
E: (1/1,0/1)w1 w2^4
";

fn main() -> crsphere::Result<()> {
    let rep = analyze_text(INPUT, &AnalyzeOptions { oracle: true })?;
    println!("{}", serde_json::to_string_pretty(&rep).expect("serializes"));
    Ok(())
}
