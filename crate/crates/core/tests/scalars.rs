use num_rational::Ratio;
use qmodel_core::diagonal::build_diagonal;
use qmodel_core::dgl::DglPresentation;
use qmodel_core::product::build_product_model;
use qmodel_core::{GeneratorSet, LieElement, Scalar};

fn sphere<C: Scalar>() -> DglPresentation<C> {
    let set = GeneratorSet::from_degrees(&[("v", 2)]).unwrap();
    DglPresentation::new("S3", &set, []).unwrap()
}

fn cp2<C: Scalar>() -> DglPresentation<C> {
    let set = GeneratorSet::from_degrees(&[("x", 1), ("y", 3)]).unwrap();
    let x = LieElement::<C>::named(&set, "x").unwrap();
    DglPresentation::new("CP2", &set, [(set.require("y").unwrap(), x.bracket(&x))]).unwrap()
}

fn sphere_times_cp2<C: Scalar>() -> String {
    let m = build_product_model(&sphere::<C>(), &cp2::<C>()).unwrap();
    assert!(m.d_squared_residual().pass && m.projection_check() && m.minimality_check());
    m.d_named("s(v,y)").unwrap().to_string()
}

#[test]
fn products_over_other_scalars() {
    let exact = sphere_times_cp2::<qmodel_core::Rational>();
    assert_eq!(exact, "[v,y] + 2*[x,s(v,x)]");
    assert_eq!(sphere_times_cp2::<Ratio<i64>>(), exact);
    assert_eq!(sphere_times_cp2::<f64>(), exact);
    assert_eq!(sphere_times_cp2::<f32>(), exact);
}

#[test]
fn diagonal_over_small_rationals() {
    let d = build_diagonal(&cp2::<Ratio<i64>>()).unwrap();
    assert!(d.projection_identities());
    let exact = build_diagonal(&cp2::<qmodel_core::Rational>()).unwrap();
    assert_eq!(d.delta_named("y").unwrap().to_string(), exact.delta_named("y").unwrap().to_string());
}
