//! Real forms of A2 from Vogan diagrams: su(3), su(1,2) and the outer form sl(3,R).

use gcs_core::liealg::{RealForm, VoganDiagram, WeylAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylAlgebra::from_type_str("A2")?;
    for (name, v) in [
        ("su(3)", VoganDiagram::inner("A2", &[])?),
        ("su(1,2)", VoganDiagram::inner("A2", &[0])?),
        ("sl(3,R)", VoganDiagram::new("A2", &[1, 0], &[])?),
    ] {
        let f = RealForm::build(&w, &v)?;
        println!(
            "{name}: inner {}, a = {:?}, sigma = {:?}, bracket leaks out of the real basis: {}",
            f.inner,
            f.a,
            f.sigma.perm,
            f.real_closure_violations().len()
        );
    }
    Ok(())
}
