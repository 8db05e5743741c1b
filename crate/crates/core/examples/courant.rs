//! Courant integrability on so(4): skew structures agree with the D^c criterion, symmetric ones never integrate.

use gcs_core::gcslin::sample::{random_skew_structure, random_symmetric, rng};
use gcs_core::gcslin::holo_space_of;
use gcs_core::leftinv::algebras::so;
use gcs_core::leftinv::{courant_check, dc_connection, mainthm_check, non_integrability_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sc = so(4);
    let dc = dc_connection(&sc);
    let mut r = rng(3);
    let skew = holo_space_of(&random_skew_structure(&mut r, 6, 1))?;
    println!("skew: courant {}, criterion with D^c {}", courant_check(&sc, &skew)?.status(), mainthm_check(&sc, &skew, &dc).status());
    let sym = holo_space_of(&random_symmetric(&mut r, 6, 2))?;
    println!("symmetric: {:?}", non_integrability_witness(&sc, &sym)?);
    Ok(())
}
