//! Weyl basis of G2: structure constants, Killing normalisation and the Jacobi identity.

use gcs_core::liealg::WeylAlgebra;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylAlgebra::from_type_str("G2")?;
    let rs = w.rs();
    println!("G2: dim {}, {} roots, {} nonzero N", w.dim, rs.len(), w.nonzero_n());
    println!("Jacobi violations: {}", w.brackets.jacobi_violations().len());
    let (a, b) = (0, 1);
    if let Some(g) = rs.sum(a, b) {
        println!("N({a},{b}) = {} with alpha+beta = root {g} {:?}", w.n(a, b), rs.root(g));
    }
    let ea = w.unit(w.e(0));
    let ena = w.unit(w.e(rs.neg(0)));
    println!("B(E_a, E_-a) = {}", w.killing_form(&ea, &ena));
    Ok(())
}
