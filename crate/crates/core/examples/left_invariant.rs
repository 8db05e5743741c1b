//! The integrability criterion for a lifted structure on T*G against the brute-force involutivity oracle.

use gcs_core::admissible::inner::inner_admissible;
use gcs_core::leftinv::{d0_connection, dc_connection, involutivity_oracle, mainthm_check};
use gcs_core::liealg::subalgebra::full_cartan;
use gcs_core::liealg::{RealForm, VoganDiagram, WeylAlgebra};
use gcs_core::rootsys::RootSubset;
use gcs_core::{Matrix, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylAlgebra::from_type_str("A1")?;
    let f = RealForm::build(&w, &VoganDiagram::inner("A1", &[])?)?;
    let eps0 = Matrix::identity(1).scale(&Scalar::i());
    let (t, _) = inner_admissible(&f, &full_cartan(1), &RootSubset::new([0]), &eps0, Default::default())?;
    let h = t.to_holo(&f);
    for (name, d) in [("D0", d0_connection(&f)?), ("Dc", dc_connection(&f.real_brackets))] {
        let c = mainthm_check(&f.real_brackets, &h, &d);
        let o = involutivity_oracle(&f.real_brackets, &h, &d);
        println!("{name}: criterion {}, oracle {}", c.status(), o.status());
        print!("{}", c.render_text());
    }
    Ok(())
}
