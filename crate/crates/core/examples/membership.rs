//! Deciding membership in G = ⋃ A⁻ⁿZʳ with certificates.

use padic_functionals::{RatVector, StationaryPresentation};

fn main() -> padic_functionals::Result<()> {
    let g = StationaryPresentation::from_i64_rows(&[[2, 1, 0], [0, 2, 1], [0, 0, 3]])?;
    println!("det = {}", g.det());
    for v in [["1/2", "0", "0"], ["1/4", "1/8", "0"], ["0", "0", "1/9"], ["1/5", "0", "0"], ["1/3", "1/3", "1/3"]] {
        let v = RatVector::new(v.iter().map(|x| x.parse().unwrap()).collect());
        match g.member(&v, 16)? {
            Some(e) => println!("{:?}: member, A^{} clears it", v.to_strings(), e.certificate().unwrap()),
            None => println!("{:?}: not a member", v.to_strings()),
        }
    }
    Ok(())
}
