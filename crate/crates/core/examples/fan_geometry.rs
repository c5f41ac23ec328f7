//! Validation, Chow grading, Betti numbers and ampleness on small fans.

use toric_hodge::fan::{
    cartier_data, chow_degree_map, irrelevant_generators, is_ample, standard, toric_betti,
    validate_fan, Fan,
};

fn main() {
    let f1 = standard::hirzebruch_one();
    assert!(validate_fan(&f1).is_valid());
    let chow = chow_degree_map(&f1);
    println!("F1: A = {:?}", chow.group());
    for (i, d) in chow.degrees.iter().enumerate() {
        println!("  x{} has degree {d}", i + 1);
    }
    println!("  betti {:?}", toric_betti(&f1));
    println!(
        "  irrelevant ideal {:?}",
        irrelevant_generators(&f1).generators
    );
    for a in [[0, 0, 1, 1], [0, 0, 0, 1]] {
        let cd = cartier_data(&f1, &a).expect("smooth fans make every divisor Cartier");
        println!("  divisor {a:?}: ample = {}", is_ample(&f1, &cd));
    }

    let p112 = standard::weighted_plane_112();
    let degrees: Vec<String> = chow_degree_map(&p112)
        .degrees
        .iter()
        .map(|d| d.to_string())
        .collect();
    println!("P(1,2,1): degrees {}", degrees.join(" "));
    println!("  D1 Cartier? {:?}", cartier_data(&p112, &[1, 0, 0]).err());

    let broken = Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        vec![vec![0, 1], vec![1, 2]],
    )
    .unwrap();
    for failure in validate_fan(&broken).failures {
        println!("broken fan: {failure}");
    }
}
