//! Stage approximations of the functionals of an inductive limit, shrinking
//! towards the limit module.

use padic_functionals::groups::InductivePrefix;
use padic_functionals::{IntMatrix, Prime};

fn main() -> padic_functionals::Result<()> {
    let a = IntMatrix::from_i64_rows(&[[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]]);
    let prefix = InductivePrefix::stationary(&a, 6)?;
    let p = Prime::new(3)?;
    for stage in 0..=6 {
        let m = prefix.limit_prefix_functionals(p, 6, stage)?;
        println!("stage {stage}: order 3^{:<3} divisors {:?}", m.log_cardinality(), m.elementary_divisors());
    }
    Ok(())
}
