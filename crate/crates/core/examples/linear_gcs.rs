//! A seeded symmetric structure on R^4 ⊕ (R^4)*: holomorphic data, reconstruction and B-field normal form.

use gcs_core::gcslin::sample::{random_symmetric, rng};
use gcs_core::gcslin::{bfield_decompose, holo_space_of, reconstruct_gcs};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut r = rng(11);
    let s = random_symmetric(&mut r, 4, 2);
    let h = holo_space_of(&s)?;
    println!("dim E = {}, dim Delta = {}", h.k(), h.delta().len());
    println!("reconstruction is exact: {}", reconstruct_gcs(&h)? == s);
    let nf = bfield_decompose(&s)?;
    println!("B = {:?}", nf.b);
    println!("g_Delta = {:?}", nf.g_delta);
    println!("normal form verified: {}", nf.verified);
    Ok(())
}
