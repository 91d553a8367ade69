use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use splitcryst::catalog::{catalog, gamma, lattice};
use splitcryst::cells::point_stabilizer;
use splitcryst::exact::{qr, Affine, Lattice, Mat3, Vec3};
use splitcryst::kgroup::{smith_normal_form, IntMatrix, KExpr};

fn rational_point() -> impl Strategy<Value = Vec3> {
    prop::array::uniform3((-24i64..=24, 1i64..=12)).prop_map(|c| Vec3(c.map(|(n, d)| qr(n, d))))
}

fn unimodular() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..8).prop_map(|ops| {
        let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, j, k) in ops {
            if i != j {
                for row in m.iter_mut() {
                    row[j] += k * row[i];
                }
            } else {
                for row in m.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
        m
    })
}

fn kexpr() -> impl Strategy<Value = KExpr> {
    (0u32..4, 0u32..4, 0u32..4, any::<bool>(), any::<bool>(), 0u32..3, 0u32..3).prop_map(
        |(free_rank, z2_count, z4_count, inf_z2, inf_z4, nk_d4, nk_d6)| KExpr {
            free_rank,
            z2_count,
            z4_count,
            inf_z2,
            inf_z4,
            nk_d4,
            nk_d6,
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // Stab(g v) = h Stab(v) h^-1 for g = (t, h), on every maximal group.
    #[test]
    fn stabilizer_is_equivariant(k in 0usize..48, t in prop::array::uniform3(-2i64..=2), v in rational_point()) {
        let cat = catalog().unwrap();
        for i in 1..=7 {
            let g = gamma(&cat, i);
            let h = &g.point_group.elements()[k % g.point_group.order()];
            let b = g.lattice.basis_matrix();
            let shift = b * &Vec3::ints(t);
            let gv = Affine { t: shift, m: h.clone() }.apply(&v);
            let lhs = point_stabilizer(g, &gv).group;
            let rhs = point_stabilizer(g, &v).group.conjugate(h);
            prop_assert_eq!(lhs, rhs, "Gamma_{}", i);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn membership_ignores_the_basis(u in unimodular(), probes in prop::collection::vec(rational_point(), 8)) {
        for i in 1..=7 {
            let l = lattice(i).unwrap();
            let rebased = l.basis_matrix() * &Mat3::ints(u);
            let l2 = Lattice::new([rebased.col(0), rebased.col(1), rebased.col(2)], None).unwrap();
            for p in probes.iter().chain(l.basis.iter()) {
                prop_assert_eq!(l.contains(p), l2.contains(p), "L{} at {}", i, p);
            }
            // Integer combinations of the old basis stay inside.
            let w = l.basis_matrix() * &Vec3::ints([u[0][1], u[1][2] - 3, u[2][0] + 1]);
            prop_assert!(l2.contains(&w));
        }
    }
}

proptest! {
    #[test]
    fn infinite_sums_absorb(a in kexpr(), b in kexpr(), c in kexpr()) {
        let inf = KExpr::inf_z2();
        prop_assert_eq!(a + inf + inf, a + inf);
        prop_assert_eq!((a + inf) + b, (a + b) + inf);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(KExpr::parse(&a.to_string()).unwrap(), a);
    }
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_form_recomposes(rows in matrix()) {
        let m = IntMatrix::from_i64(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&s.d).mul(&s.v), m.clone());
        prop_assert!(s.u.det().abs().is_one());
        prop_assert!(s.v.det().abs().is_one());
        for i in 0..m.rows {
            for j in 0..m.cols {
                let e = s.d.get(i, j);
                if i != j {
                    prop_assert!(e.is_zero());
                } else if i < s.rank() {
                    prop_assert_eq!(e, &s.factors[i]);
                } else {
                    prop_assert!(e.is_zero());
                }
            }
        }
        prop_assert!(s.factors.iter().all(|f| f.is_positive()));
        prop_assert!(s.factors.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::zero()));
    }
}
