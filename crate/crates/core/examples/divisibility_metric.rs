//! The p-adic divisibility distance d_p on a stationary group.

use padic_functionals::{Prime, RatVector, StationaryPresentation};

fn main() -> padic_functionals::Result<()> {
    let g = StationaryPresentation::from_i64_rows(&[[1, 1], [1, 6]])?;
    let p = Prime::new(5)?;
    println!("det = {}, corank at 5 = {}", g.det(), g.pro_p_corank(p));
    let zero = g.element(RatVector::from_i64(&[0, 0]))?;
    for v in [[1, 0], [5, 0], [25, 50], [3, -1], [75, -25]] {
        let x = g.element(RatVector::from_i64(&v))?;
        let proj = g.unit_projection(p, 8, &x)?;
        println!("d_5({v:?}, 0) = {}   unit component {:?}", g.dp_distance(p, 8, &x, &zero)?, proj.component());
    }
    Ok(())
}
