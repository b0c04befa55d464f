//! Adjoining elements to a stationary group and rebuilding a stationary
//! presentation across a quasi-isomorphism.

use num_bigint::BigInt;
use padic_functionals::quasi::{power_congruence, quasi_to_stationary};
use padic_functionals::{IntMatrix, QuasiIsoData, RatMatrix, RatVector, StationaryPresentation};

fn main() -> padic_functionals::Result<()> {
    let b = IntMatrix::from_i64_rows(&[[1, 1], [1, 0]]);
    for m in [2, 10, 12] {
        let (k, l) = power_congruence(&b, &BigInt::from(m))?;
        println!("Fibonacci matrix mod {m}: B^{k} = B^{l}");
    }

    let g = StationaryPresentation::from_i64_rows(&[[1, 0], [0, 2]])?;
    let z = RatVector::new(vec!["1/2".parse().unwrap(), "1/2".parse().unwrap()]);
    let adj = g.adjoin(&z)?;
    println!("<G, z>: m = {}, (l1, l2) = ({}, {}), matrix\n{}", adj.m, adj.l1, adj.l2, adj.stationary.matrix());
    println!("new free basis {:?}", adj.presentation.basis().to_strings());

    let h = StationaryPresentation::from_i64_rows(&[[5]])?;
    let two = RatMatrix::identity(1).scale(&BigInt::from(2).into());
    let q = QuasiIsoData::new(BigInt::from(2), two, RatMatrix::identity(1))?;
    let (inc, s) = quasi_to_stationary(&h, &q, &[RatVector::new(vec!["1/2".parse().unwrap()])], 16)?;
    println!("(1/2)·Z[1/5] rebuilt: basis {:?}, matrix {}", inc.basis().to_strings(), s.matrix());
    Ok(())
}
