//! Smith normal form and the Chow group of a weighted projective plane.

use toric_hodge::abelian::{cokernel_presentation, smith_normal_form, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("A =\n{a}");
    println!("invariant factors: {:?}", snf.diagonal());
    assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s);

    // pairing matrix of the fan with rays (1,0), (0,1), (-1,-2)
    let pairing = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![-1, -2]]);
    let coker = cokernel_presentation(&pairing);
    println!("coker = {:?}", coker.group());
    for i in 0..3 {
        let mut e = vec![0; 3];
        e[i] = 1;
        println!("  [D{}] = {}", i + 1, coker.project(&e));
    }
}
