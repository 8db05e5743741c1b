//! Exhaustive search for verified triples over the σ-parabolic subsets of su(3), printed as triple JSON.

use gcs_core::admissible::{search, MuTemplate, SearchOptions, TripleSpec};
use gcs_core::liealg::{RealForm, VoganDiagram, WeylAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylAlgebra::from_type_str("A2")?;
    let f = RealForm::build(&w, &VoganDiagram::inner("A2", &[])?)?;
    let opts = SearchOptions { templates: vec![MuTemplate::Zero, MuTemplate::Height], ..Default::default() };
    let report = search(&f, &opts)?;
    println!("{} candidates, {} verified", report.candidates, report.verified.len());
    if let Some(hit) = report.verified.first() {
        println!("{}", serde_json::to_string_pretty(&TripleSpec::from_hit(&f, hit))?);
    }
    Ok(())
}
