mod common;

use common::{config, word};
use mazurkit_core::algebra::Word;
use mazurkit_core::surface::{standard_curve, twist_of_image, Curve, MappingClass, PlanarSurface, Side};
use mazurkit_core::Error;
use proptest::prelude::*;

const HOLES: u32 = 5;

fn surface() -> PlanarSurface {
    PlanarSurface::new(HOLES).unwrap()
}

/// Any proper nonempty hole set of S(0,5), with random side choices.
fn standard(surface: PlanarSurface) -> impl Strategy<Value = Curve> {
    let r = surface.holes();
    (1u32..(1 << r) - 1, prop::collection::vec(any::<bool>(), 4)).prop_map(move |(mask, flips)| {
        let holes: Vec<u32> = (1..=r).filter(|h| mask & (1 << (h - 1)) != 0).collect();
        let needed = match standard_curve(surface, &holes, &[]) {
            Ok(_) => 0,
            Err(Error::SideChoices { expected, .. }) => expected,
            Err(e) => panic!("{e}"),
        };
        let sides: Vec<Side> = flips[..needed].iter().map(|&f| if f { Side::Far } else { Side::Near }).collect();
        standard_curve(surface, &holes, &sides).unwrap()
    })
}

/// Consecutive inner holes `a..=b`.
fn interval(surface: PlanarSurface) -> impl Strategy<Value = (u32, u32)> {
    let top = surface.holes() - 1;
    (1..=top).prop_flat_map(move |a| (Just(a), a..=top))
}

fn interval_curve(s: PlanarSurface, (a, b): (u32, u32)) -> Curve {
    let holes: Vec<u32> = (a..=b).collect();
    standard_curve(s, &holes, &[]).unwrap()
}

fn mapping_class(s: PlanarSurface) -> impl Strategy<Value = MappingClass> {
    prop::collection::vec((standard(s), any::<bool>()), 0..4).prop_map(move |twists| {
        twists.iter().fold(MappingClass::identity(s), |acc, (c, inv)| {
            let t = c.twist().unwrap();
            acc.compose(&if *inv { t.inverse() } else { t }).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn twists_are_automorphisms_preserving_delta(c in standard(surface())) {
        let t = c.twist().unwrap();
        prop_assert!(t.is_valid());
        let delta = surface().boundary_word();
        prop_assert!(t.apply(&delta).unwrap().is_conjugate_to(&delta));
        prop_assert!(t.compose(&t.inverse()).unwrap().is_identity());
    }

    #[test]
    fn twist_fixes_its_curve(c in standard(surface())) {
        prop_assert_eq!(&c.twist().unwrap().apply(c.word()).unwrap(), c.word());
    }

    #[test]
    fn disjoint_or_nested_twists_commute(i in interval(surface()), j in interval(surface())) {
        let overlapping = i.0.max(j.0) <= i.1.min(j.1);
        let nested = (i.0 <= j.0 && j.1 <= i.1) || (j.0 <= i.0 && i.1 <= j.1);
        prop_assume!(!overlapping || nested);
        let s = surface();
        let a = interval_curve(s, i).twist().unwrap();
        let b = interval_curve(s, j).twist().unwrap();
        prop_assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
    }

    #[test]
    fn homology_action_is_trivial(c in standard(surface()), w in word(4, 20)) {
        let t = c.twist().unwrap();
        prop_assert_eq!(t.apply(&w).unwrap().exponent_sums(), w.exponent_sums());
    }

    #[test]
    fn images_of_conjugates_are_conjugate(phi in mapping_class(surface()), w in word(4, 12), g in word(4, 8)) {
        let image = phi.apply(&w).unwrap();
        let conj_image = phi.apply(&w.conjugated_by(&g)).unwrap();
        prop_assert!(image.is_conjugate_to(&conj_image));
    }

    #[test]
    fn twist_of_image_conjugates(phi in mapping_class(surface()), c in standard(surface()), w in word(4, 10)) {
        let t_image = twist_of_image(&phi, &c).unwrap();
        let lhs = t_image.apply(&phi.apply(&w).unwrap()).unwrap();
        let rhs = phi.apply(&c.twist().unwrap().apply(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // the image curve carries the same twist
        prop_assert_eq!(phi.apply_curve(&c).unwrap().twist().unwrap(), t_image);
    }

    #[test]
    fn composition_is_associative(a in mapping_class(surface()), b in mapping_class(surface()), c in mapping_class(surface())) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(left.is_valid());
        prop_assert_eq!(left, right);
    }
}

#[test]
fn lantern_composite_is_conjugation_by_delta() {
    let s = PlanarSurface::new(4).unwrap();
    let delta = s.boundary_word();
    let t12 = standard_curve(s, &[1, 2], &[]).unwrap().twist().unwrap();
    let t23 = standard_curve(s, &[2, 3], &[]).unwrap().twist().unwrap();
    let t13 = standard_curve(s, &[1, 3], &[Side::Near]).unwrap().twist().unwrap();
    let lantern = t12.compose(&t23).unwrap().compose(&t13).unwrap();
    for i in 0..3 {
        let x = Word::generator(3, i).unwrap();
        assert_eq!(lantern.apply(&x).unwrap(), x.conjugated_by(&delta));
    }
    // the outer boundary twist is the same automorphism
    let outer = standard_curve(s, &[4], &[]).unwrap().twist().unwrap();
    assert_eq!(lantern, outer);
    // inner boundary twists are invisible
    for h in 1..=3 {
        assert!(standard_curve(s, &[h], &[]).unwrap().twist().unwrap().is_identity());
    }
}

#[test]
fn family_images_keep_gamma_class() {
    let s = PlanarSurface::new(4).unwrap();
    let beta = standard_curve(s, &[2, 3], &[]).unwrap();
    let gamma = standard_curve(s, &[1, 2], &[]).unwrap();
    let phi = gamma.twist().unwrap().compose(&beta.twist().unwrap()).unwrap();
    for n in 0..=5 {
        let image = phi.pow(n).apply_curve(&gamma).unwrap();
        assert_eq!(image.class(), gamma.class());
    }
}
