//! Exact integer linear algebra: characteristic polynomials, determinants,
//! Hermite forms and lattice membership.

use num_bigint::BigInt;
use padic_functionals::exact::{charpoly, det_exact, hnf_int, lattice_member};
use padic_functionals::{IntMatrix, RatVector};

fn main() -> padic_functionals::Result<()> {
    let a = IntMatrix::from_i64_rows(&[[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]]);
    println!("A =\n{a}");
    println!("charpoly  {:?}", charpoly(&a)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("det       {}", det_exact(&a)?);

    let gens: Vec<Vec<BigInt>> = [[4, 6, 2], [2, 3, 7], [6, 9, 9]]
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let h = hnf_int(&gens)?;
    println!("HNF of the generators\n{h}");
    for v in [[6, 9, 9], [1, 0, 0], [0, 0, 12]] {
        match lattice_member(&h, &RatVector::from_i64(&v))? {
            Some(c) => println!("{v:?} = {:?} in the HNF basis", c.iter().map(ToString::to_string).collect::<Vec<_>>()),
            None => println!("{v:?} is not in the lattice"),
        }
    }
    Ok(())
}
