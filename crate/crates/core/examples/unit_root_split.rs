//! Splitting a characteristic polynomial into its unit-root and ideal-root
//! factors over Z/p^N, with Bézout cofactors.

use num_bigint::BigInt;
use padic_functionals::factor::{hensel_split, unit_root_count};
use padic_functionals::Prime;

fn show(name: &str, coeffs: Vec<num_bigint::BigUint>) {
    println!("  {name:<5}{:?}", coeffs.iter().map(ToString::to_string).collect::<Vec<_>>());
}

fn main() -> padic_functionals::Result<()> {
    for (chi, p, n) in [(vec![1, 0, -2, 0, 9], 3, 10), (vec![1, -10, 24], 3, 6), (vec![1, 1, 2, 4, 8], 2, 16)] {
        let chi: Vec<BigInt> = chi.into_iter().map(BigInt::from).collect();
        let p = Prime::new(p)?;
        println!("chi = {chi:?}, p = {p}, N = {n}, unit roots: {}", unit_root_count(&chi, p)?);
        let s = hensel_split(&chi, p, n)?;
        show("chi1", s.chi1().descending());
        show("chi0", s.chi0().descending());
        show("u", s.u().descending());
        show("v", s.v().descending());
    }
    Ok(())
}
