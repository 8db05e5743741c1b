//! Admissible triples on su(3) from a positive system, and what breaks when one condition is dropped.

use std::collections::BTreeMap;

use gcs_core::admissible::inner::inner_admissible;
use gcs_core::admissible::{check_mainapplic, EpsilonParams};
use gcs_core::liealg::subalgebra::full_cartan;
use gcs_core::liealg::{RealForm, VoganDiagram, WeylAlgebra};
use gcs_core::rootsys::RootSubset;
use gcs_core::{Matrix, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylAlgebra::from_type_str("A2")?;
    let f = RealForm::build(&w, &VoganDiagram::inner("A2", &[])?)?;
    let eps0 = Matrix::identity(2).scale(&Scalar::i());
    let mu: BTreeMap<usize, Scalar> = [(0, Scalar::from_int(1)), (1, Scalar::from_frac(-1, 2)), (2, Scalar::from_int(3))].into();
    let (t, params) = inner_admissible(&f, &full_cartan(2), &RootSubset::positive(f.algebra.rs()), &eps0, mu)?;
    print!("{}", check_mainapplic(&f, &t.k, &params)?.render_text());

    let broken = EpsilonParams { mu: [(0, Scalar::i())].into(), ..params };
    let c = check_mainapplic(&f, &t.k, &broken)?;
    println!("with mu_0 = i: {} on {:?}", c.status(), c.failing());
    Ok(())
}
