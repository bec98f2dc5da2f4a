mod common;

use common::{body, point, polygon, positive};
use mixarea::arith::rat;
use mixarea::decompose::decompose;
use mixarea::geometry::{area, convex_hull, minkowski_sum, mixed_area, mixed_area_support, width};
use mixarea::ConvexBody;
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn self_mixed_area_is_area(k in body()) {
        prop_assert_eq!(mixed_area(&k, &k), area(&k));
    }

    #[test]
    fn symmetric_and_translation_invariant(k in body(), l in body(), t in point(5)) {
        let v = mixed_area(&k, &l);
        prop_assert_eq!(&v, &mixed_area(&l, &k));
        prop_assert_eq!(&v, &mixed_area(&k.translate(&t), &l));
        prop_assert!(v >= rat(0));
    }

    #[test]
    fn linear_in_each_argument(a in body(), c in body(), b in body(), lambda in positive(3)) {
        let lhs = mixed_area(&minkowski_sum(&a, &c.dilate(&lambda)), &b);
        prop_assert_eq!(lhs, mixed_area(&a, &b) + &lambda * mixed_area(&c, &b));
    }

    #[test]
    fn minkowski_inequality(k in body(), l in body()) {
        let v = mixed_area(&k, &l);
        prop_assert!(&v * &v >= area(&k) * area(&l));
    }

    #[test]
    fn support_formula_agrees(k in body(), l in body()) {
        match mixed_area_support(&k, &l) {
            Ok(s) => prop_assert_eq!(s, mixed_area(&k, &l)),
            Err(_) => {
                prop_assert!(l.is_point());
                prop_assert!(mixed_area(&k, &l).is_zero());
            }
        }
    }

    #[test]
    fn width_identity(k in body(), a in point(10), d in point(10)) {
        prop_assume!(!d.is_zero());
        let seg = ConvexBody::segment(a.clone(), &a + &d);
        prop_assert_eq!(mixed_area(&k, &seg) * rat(2), width(&k, &d.rotate_cw()).unwrap());
    }

    #[test]
    fn hull_is_idempotent(k in body()) {
        prop_assert_eq!(convex_hull(k.vertices()), k);
    }

    #[test]
    fn minkowski_sum_contains_vertex_sums(k in body(), l in body()) {
        let s = minkowski_sum(&k, &l);
        for p in k.vertices() {
            for q in l.vertices() {
                prop_assert!(s.contains(&(p + q)));
            }
        }
        prop_assert!(area(&s) >= area(&k) + area(&l));
    }

    #[test]
    fn decomposition_reconstructs(p in polygon()) {
        let d = decompose(&p);
        prop_assert!(d.reconstruct().equals_up_to_translation(&p));
        prop_assert!(d.summands.iter().all(|s| s.len() == 2 || s.len() == 3));
        prop_assert!(d.len() <= p.len());
    }
}
