//! Special complex and special symplectic checks: flat R^4 and the affine algebra aff(1).

use gcs_core::gcslin::sample::standard_complex;
use gcs_core::leftinv::algebras::{abelian, aff};
use gcs_core::leftinv::{special_complex_check, special_pm_check, Connection, Sign};
use gcs_core::Matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let flat = abelian(4);
    for s in [Sign::Plus, Sign::Minus] {
        println!("R^4 {s:?}: {}", special_pm_check(&flat, &standard_complex(4), &Connection::zero(4), s)?.status());
    }
    let sc = aff();
    let j = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
    let d = Connection::from_operators(&[Matrix::identity(2), Matrix::zeros(2, 2)]);
    println!("aff(1) special complex: {}", special_complex_check(&sc, &j, &d)?.status());
    print!("{}", special_pm_check(&sc, &j, &d, Sign::Plus)?.render_text());
    Ok(())
}
