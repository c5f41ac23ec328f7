//! Facts about the bundled problem files.

mod common;

use toric_hodge::cayley::build_cayley;
use toric_hodge::error::Error;
use toric_hodge::fan::{cartier_data, cayley_fan, standard, toric_betti, validate_fan};
use toric_hodge::hodge::{
    compute_hodge, structural_report, variable_hodge, Checks, HodgeOptions, Method, MethodChoice,
};
use toric_hodge::smoothness::{
    nondegenerate_check, quasi_smooth_check, NondegenerateVerdict, QuasiSmoothVerdict,
};

fn hodge(name: &str, method: MethodChoice) -> toric_hodge::hodge::HodgeResult {
    let p = common::load(name);
    let opts = HodgeOptions {
        method,
        ..Default::default()
    };
    compute_hodge(&p.fan, &p.polynomials, &p.names, &opts).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn quintics() {
    for name in ["quintic_fermat", "quintic_sparse"] {
        let r = hodge(name, MethodChoice::Jacobian);
        assert!(r.certified);
        assert_eq!(r.table.values(), vec![1, 101, 101, 1], "{name}");
        assert_eq!(r.diamond.as_ref().unwrap().get(1, 1), 1);
        assert_eq!(r.euler_characteristic, Some(-200));
    }
}

#[test]
fn quadric_pair_is_degenerate_at_a_fixed_point() {
    let p = common::load("quadric_pair");
    assert_eq!(
        quasi_smooth_check(&p.fan, &p.polynomials).unwrap(),
        QuasiSmoothVerdict::QuasiSmooth
    );
    assert_eq!(
        nondegenerate_check(&p.fan, &p.polynomials).unwrap(),
        NondegenerateVerdict::Degenerate {
            cone: vec![0, 1, 2],
            subset: vec![1]
        }
    );
    let r = hodge("quadric_pair", MethodChoice::Auto);
    assert_eq!(r.method, Method::Jacobian);
    assert_eq!(r.table.values(), vec![1, 1]);
    assert_eq!(r.table.middle_correction.as_ref().map(|c| c.value), Some(0));
    assert_eq!(r.euler_characteristic, Some(0));
    // the colon ring is not covered by a theorem here
    let err = compute_hodge(
        &p.fan,
        &p.polynomials,
        &p.names,
        &HodgeOptions {
            method: MethodChoice::Colon,
            ..Default::default()
        },
    );
    assert!(matches!(err, Err(Error::HypothesisViolated(_))));
}

#[test]
fn three_lines_middle_correction() {
    let r = hodge("p1p1p1_two_forms", MethodChoice::Jacobian);
    let mid = r.table.entries.iter().find(|e| e.p == 2).unwrap();
    assert_eq!(r.table.middle_correction.as_ref().map(|c| c.value), Some(2));
    assert_eq!((mid.ring_dim, mid.value, mid.bidegree), (3, 1, (0, 1)));
}

#[test]
fn cubic_pair_in_p5() {
    let r = hodge("cicy_33", MethodChoice::Jacobian);
    assert_eq!(r.table.values(), vec![1, 73, 73, 1]);
    assert_eq!(r.diamond.as_ref().unwrap().get(1, 1), 1);
    assert_eq!(r.euler_characteristic, Some(-144));
}

#[test]
fn cubic_surface() {
    let r = hodge("cubic_surface", MethodChoice::Auto);
    let dia = r.diamond.unwrap();
    assert_eq!((dia.get(1, 1), dia.get(2, 0)), (7, 0));
    assert_eq!(r.euler_characteristic, Some(9));
}

#[test]
fn cayley_fans_of_the_line() {
    let p1 = standard::projective_space(1);
    let o1 = cartier_data(&p1, &[1, 0]).unwrap();
    let o0 = cartier_data(&p1, &[0, 0]).unwrap();
    let both = cayley_fan(&p1, &[o1.clone(), o1.clone()]).unwrap();
    assert!(validate_fan(&both).is_valid());
    assert!(common::lattice_isomorphic(
        &both,
        &standard::product_of_lines(2)
    ));
    assert_eq!(toric_betti(&both), vec![1, 0, 2, 0, 1]);
    let twisted = cayley_fan(&p1, &[o1, o0]).unwrap();
    assert!(common::lattice_isomorphic(
        &twisted,
        &standard::hirzebruch_one()
    ));
    assert!(!common::lattice_isomorphic(
        &twisted,
        &standard::product_of_lines(2)
    ));
}

/// Quasi-smoothness of the system agrees with quasi-smoothness of `F` on
/// the Cayley fan.
#[test]
fn cayley_hypersurface_quasi_smoothness() {
    for name in [
        "quadric_pair",
        "quadric_pair_diagonal",
        "p1p1p1_two_forms",
        "cicy_33",
        "singular_quadric_pair",
    ] {
        let p = common::load(name);
        let setup = build_cayley(&p.fan, &p.polynomials).unwrap();
        let cf = setup.cayley_fan().unwrap();
        let system = quasi_smooth_check(&p.fan, &p.polynomials).unwrap();
        let single = quasi_smooth_check(cf, std::slice::from_ref(setup.polynomial())).unwrap();
        assert_eq!(
            system.holds(),
            single.holds(),
            "{name}: {system:?} vs {single:?}"
        );
        assert_eq!(system.holds(), name != "singular_quadric_pair", "{name}");
    }
}

#[test]
fn negative_controls() {
    let p = common::load("singular_quadric_cone");
    assert!(matches!(
        quasi_smooth_check(&p.fan, &p.polynomials).unwrap(),
        QuasiSmoothVerdict::NotQuasiSmooth { .. }
    ));

    let p = common::load("degenerate_conic");
    assert_eq!(
        quasi_smooth_check(&p.fan, &p.polynomials).unwrap(),
        QuasiSmoothVerdict::QuasiSmooth
    );
    assert_eq!(
        nondegenerate_check(&p.fan, &p.polynomials).unwrap(),
        NondegenerateVerdict::Degenerate {
            cone: vec![0, 1],
            subset: vec![0]
        }
    );

    let p = common::load("p112_line");
    assert_eq!(p.ring.degrees()[0].free, vec![1]);
    assert!(matches!(
        cartier_data(&p.fan, &[1, 0, 0]),
        Err(Error::NotCartier { .. })
    ));

    let p = common::load("broken_fan");
    let failures = validate_fan(&p.fan).failures;
    assert!(matches!(&failures[0], Error::NotComplete(msg) if msg.contains("facet")));

    let p = common::load("p1p1_outside_irrelevant");
    let r = structural_report(&p.fan, &p.polynomials, &p.names, Checks::Full).unwrap();
    assert!(!r.all_in_irrelevant() && !r.lefschetz_applies);
}

#[test]
fn tables_are_conjugation_symmetric() {
    for name in [
        "quintic_fermat",
        "quadric_pair",
        "quadric_pair_diagonal",
        "p1p1p1_two_forms",
        "cubic_surface",
    ] {
        let p = common::load(name);
        let setup = build_cayley(&p.fan, &p.polynomials).unwrap();
        let jac = variable_hodge(&setup, Method::Jacobian).unwrap();
        assert!(jac.is_symmetric(), "{name}: {:?}", jac.values());
        if nondegenerate_check(&p.fan, &p.polynomials).unwrap().holds() {
            assert_eq!(
                variable_hodge(&setup, Method::Colon).unwrap().values(),
                jac.values(),
                "{name}"
            );
        }
        for e in &jac.entries {
            assert!(e.value <= e.ambient_dim);
        }
    }
}
