//! Submodules of (Z/p^N)^r: Howell forms, kernels, containment and
//! elementary divisors.

use padic_functionals::padic::{howell_form, left_kernel, PadicMatrix, PadicRing, PadicRowVec};
use padic_functionals::{IntMatrix, Prime};

fn main() -> padic_functionals::Result<()> {
    let ring = PadicRing::new(Prime::new(3)?, 4)?;
    let gens = [
        PadicRowVec::from_i64(&ring, &[3, 1, 0]),
        PadicRowVec::from_i64(&ring, &[0, 9, 3]),
        PadicRowVec::from_i64(&ring, &[6, 2, 0]),
    ];
    let module = howell_form(&ring, 3, &gens)?;
    println!("Howell rows mod 3^4: {:?}", module.rows());
    println!("elementary divisor exponents {:?}, order 3^{}", module.elementary_divisors(), module.log_cardinality());
    println!("contains (0, 27, 9): {}", module.contains(&PadicRowVec::from_i64(&ring, &[0, 27, 9])));
    println!("contains (1, 0, 0): {}", module.contains(&PadicRowVec::from_i64(&ring, &[1, 0, 0])));

    let m = PadicMatrix::from_int(&ring, &IntMatrix::from_i64_rows(&[[3, 0], [1, 9], [0, 27]]));
    let kernel = left_kernel(&m);
    println!("left kernel of [[3,0],[1,9],[0,27]]: {:?} (rank {})", kernel.rows(), kernel.rank());
    Ok(())
}
