//! The rank-two space of 3-adic functionals of the Dugas group
//! G = ⋃ A⁻ⁿZ⁴, and its splitting into two rank-two summands.

use padic_functionals::{Prime, RatVector, StationaryPresentation};

fn main() -> padic_functionals::Result<()> {
    let g = StationaryPresentation::from_i64_rows(&[[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]])?;
    let three = Prime::new(3)?;
    println!("3-divisible: {:?}", g.is_p_divisible(three));
    println!("pro-3 corank: {}", g.pro_p_corank(three));

    let basis = g.functionals_basis(three, 10)?;
    let split = basis.split();
    println!("chi1 mod 3^10: {:?}", split.chi1().descending().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("functionals mod 3^10 (rank {}):", basis.rank());
    for row in basis.rows() {
        println!("  {:?}", row.entries().iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    let v = RatVector::from_i64(&[0, 2, 0, -1]).scale(&"1/9".parse().unwrap());
    let w = g.member(&v, 16)?.expect("A⁻¹e₁ is in G");
    println!("{:?} is a member, certificate n = {:?}", v.to_strings(), w.certificate());
    println!("functional values {:?}", basis.evaluate(&v)?);
    Ok(())
}
