//! σ-parabolic subsets of the roots of sl(3,R) and height-based ν on their symmetric parts.

use gcs_core::admissible::nu_from_heights;
use gcs_core::liealg::{RealForm, VoganDiagram, WeylAlgebra};
use gcs_core::rootsys::{classify_subset, enumerate_sigma_parabolic, EnumerateOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylAlgebra::from_type_str("A2")?;
    let f = RealForm::build(&w, &VoganDiagram::new("A2", &[1, 0], &[])?)?;
    let rs = f.algebra.rs();
    for r0 in enumerate_sigma_parabolic(rs, &f.sigma, EnumerateOptions::default())? {
        let class = classify_subset(rs, &r0, &f.sigma);
        let nu = nu_from_heights(&f, &r0.symmetric_part(rs))?;
        println!("{:?} sigma-positive {} nu {:?}", r0.members, class.sigma_positive, nu.values().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    Ok(())
}
