mod common;

use common::{char_of, fixture, int, label, p, row};
use num_rational::BigRational;
use num_traits::Zero;
use spinmod::characters::{divided, e_bullet, CharLabel, Direction, FormalChar};
use spinmod::partitions::partitions_of;
use spinmod::regdouble::spin_regularization_entry;
use spinmod::rouquier::{
    assemble_e, psi_ordinary_pairings, selection_matrix, steinberg_entry, unitri_inverse,
    InverseKind, PartMatrix, RouquierBlock, RowLabel,
};
use spinmod::symfun::{e_to_schur, h_to_schur};
use spinmod::Partition;

fn d(w: usize) -> PartMatrix {
    fixture(&format!("d_w{w}.txt"))
}

fn dbar(w: usize) -> PartMatrix {
    fixture(&format!("dbar_w{w}.txt"))
}

/// `α ⊔ α`, with a trailing `(1)` for odd weight.
fn dup_row(alpha: &Partition, weight: usize) -> Partition {
    let mut out = alpha.duplicate();
    if weight % 2 == 1 {
        out = out.union(&p("1"));
    }
    out
}

/// Whether every column of `mu` has even length, ignoring the first one
/// when `skip_first` is set.
fn even_columns(mu: &Partition, skip_first: bool) -> bool {
    mu.conjugate()
        .parts()
        .iter()
        .enumerate()
        .all(|(k, &len)| (skip_first && k == 0) || len % 2 == 0)
}

#[test]
fn e_equals_ja_even_weight() {
    let block = RouquierBlock::new(3, 4).unwrap();
    let asm = assemble_e(&block, &d(4), &dbar(4)).unwrap();
    assert_eq!(asm.e, fixture("e_w4.txt"));
    assert_eq!(asm.spin_rows, vec![p("13,1"), p("9,5")]);
    let mut expect_a = vec![vec![0; 5]; 5];
    for (k, r) in expect_a.iter_mut().enumerate() {
        r[k] = 1;
    }
    expect_a[4][2] = 1;
    assert_eq!(asm.a.entries(), expect_a.as_slice());
}

#[test]
fn e_equals_ja_odd_weight() {
    let block = RouquierBlock::new(4, 5).unwrap();
    let asm = assemble_e(&block, &d(5), &dbar(5)).unwrap();
    assert_eq!(asm.e, fixture("e_w5.txt"));
    assert_eq!(asm.a.entry(&row("(3,2)"), &p("5")), Some(1));
    assert_eq!(asm.a.entry(&row("(1,1,1,1,1)"), &p("2,2,1")), Some(1));
    let off_diagonal: i64 = (0..7)
        .flat_map(|i| (0..7).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .map(|(i, j)| asm.a.get(i, j))
        .sum();
    assert_eq!(off_diagonal, 2);
}

#[test]
fn omega_route_matches_adjustment_route() {
    for w in 1..=5 {
        let block = RouquierBlock::new(w.max(2) - 1, w).unwrap();
        let asm = assemble_e(&block, &d(w), &dbar(w)).unwrap();
        let via_omega = block.spin_rows_via_omega().unwrap();
        assert_eq!(via_omega.mul(&d(w)).unwrap(), asm.e, "weight {w}");
        // And E D⁻¹ = J D̊⁻¹.
        let jdbar = asm.j.mul(&unitri_inverse(&dbar(w)).unwrap()).unwrap();
        assert_eq!(via_omega, jdbar, "weight {w}");
    }
}

#[test]
fn ed_inverse_golden_weight_four() {
    let block = RouquierBlock::new(3, 4).unwrap();
    let m = block.spin_rows_via_omega().unwrap();
    assert_eq!(m.entries(), &[vec![1, -1, 1, 0, 0], vec![0, 0, 1, -1, 1]]);
}

#[test]
fn five_point_cover_matrix() {
    let block = RouquierBlock::new(1, 2).unwrap();
    assert_eq!(block.tau(), &p("1"));
    let asm = assemble_e(&block, &d(2), &dbar(2)).unwrap();
    assert_eq!(asm.spin_rows, vec![p("5")]);
    let spin = fixture("s5_spin.txt");
    for (j, mu) in asm.e.cols().iter().enumerate() {
        let column = block.ordinary_label(mu);
        assert_eq!(
            spin.entry(&row("(5)"), &column),
            Some(asm.e.get(0, j)),
            "{column}"
        );
    }
    assert_eq!(spin.entry(&row("(5)"), &p("3,2")), Some(1));
    // Spin regularization fills the diagonal-type entries of every row.
    for lambda in spin.row_partitions().unwrap() {
        let (target, value) = spin_regularization_entry(&lambda).unwrap();
        assert_eq!(
            spin.entry(&RowLabel::Part(lambda.clone()), &target),
            Some(value as i64)
        );
    }
    // The ordinary part agrees with its own regularization entries.
    let ord = fixture("s5_ordinary.txt");
    for lambda in ord.row_partitions().unwrap() {
        let reg = spinmod::regdouble::regularize(&lambda);
        assert_eq!(ord.entry(&RowLabel::Part(lambda), &reg), Some(1));
    }
}

#[test]
fn steinberg_rows_match_inverted_fixtures() {
    for w in 2..=5 {
        let inv_dbar = unitri_inverse(&dbar(w)).unwrap();
        let inv_d = unitri_inverse(&d(w)).unwrap();
        let small = d(w / 2);
        for alpha in partitions_of(w / 2).unwrap() {
            let r = RowLabel::Part(dup_row(&alpha, w));
            for mu in partitions_of(w).unwrap() {
                let free = steinberg_entry(InverseKind::AdjustedFree, &alpha, &mu, None).unwrap();
                assert_eq!(inv_dbar.entry(&r, &mu), Some(free), "w={w} {r} {mu}");
                let modular =
                    steinberg_entry(InverseKind::Modular, &alpha, &mu, Some(&small)).unwrap();
                assert_eq!(inv_d.entry(&r, &mu), Some(modular), "w={w} {r} {mu}");
            }
        }
    }
}

#[test]
fn steinberg_small_case() {
    // Row (1,1) of the inverse over P(2): -ε(μ)κ((1),μ).
    let a = p("1");
    assert_eq!(
        steinberg_entry(InverseKind::AdjustedFree, &a, &p("2"), None).unwrap(),
        -1
    );
    assert_eq!(
        steinberg_entry(InverseKind::AdjustedFree, &a, &p("1,1"), None).unwrap(),
        1
    );
}

#[test]
fn adjustment_rows_at_doubled_labels() {
    for w in 2..=5 {
        let a = unitri_inverse(&dbar(w)).unwrap().mul(&d(w)).unwrap();
        let a_inv = unitri_inverse(&a).unwrap();
        let small = d(w / 2);
        let small_inv = unitri_inverse(&small).unwrap();
        let halves = partitions_of(w / 2).unwrap();
        for alpha in &halves {
            let r = RowLabel::Part(dup_row(alpha, w));
            let ra = RowLabel::Part(alpha.clone());
            for mu in partitions_of(w).unwrap() {
                let (want, want_inv) = match halves.iter().find(|b| dup_row(b, w) == mu) {
                    Some(beta) => (
                        small.entry(&ra, beta).unwrap(),
                        small_inv.entry(&ra, beta).unwrap(),
                    ),
                    None => {
                        assert!(!even_columns(&mu, w % 2 == 1));
                        (0, 0)
                    }
                };
                assert_eq!(a.entry(&r, &mu), Some(want), "w={w} A {r} {mu}");
                assert_eq!(a_inv.entry(&r, &mu), Some(want_inv), "w={w} A⁻¹ {r} {mu}");
            }
        }
    }
}

#[test]
fn fixtures_are_unitriangular_with_nonnegative_adjustment() {
    for w in 1..=5 {
        for m in [d(w), dbar(w)] {
            let inv = unitri_inverse(&m).unwrap();
            let labels = m.cols().to_vec();
            assert_eq!(m.mul(&inv).unwrap(), PartMatrix::identity(labels));
        }
        let a = unitri_inverse(&dbar(w)).unwrap().mul(&d(w)).unwrap();
        assert!(a.entries().iter().flatten().all(|&v| v >= 0), "w={w}");
    }
}

#[test]
fn spin_rows_are_triangular() {
    for w in [4, 5] {
        let e = fixture(&format!("e_w{w}.txt"));
        let halves = partitions_of(w / 2).unwrap();
        for mu in partitions_of(w).unwrap() {
            let owner = halves.iter().find(|a| dup_row(a, w) == mu);
            for beta in &halves {
                let v = e.entry(&RowLabel::Part(beta.clone()), &mu).unwrap();
                match owner {
                    None => assert_eq!(v, 0, "w={w} {beta} {mu}"),
                    Some(alpha) if alpha == beta => assert_eq!(v, 1),
                    Some(alpha) => {
                        if !alpha.dominates(beta).unwrap() {
                            assert_eq!(v, 0, "w={w} {beta} {mu}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn weight_seven_figure_self_check() {
    let e = fixture("e_w7.txt");
    let ea = fixture("eainv_w7.txt");
    assert_eq!(e.cols().len(), 15);
    assert_eq!(ea.cols(), e.cols());
    let j = selection_matrix(7).unwrap();
    for (k, alpha) in partitions_of(3).unwrap().iter().enumerate() {
        assert_eq!(ea.rows()[k], RowLabel::Pair(alpha.clone(), p("1")));
        assert_eq!(ea.entries()[k], j.entries()[k], "{alpha}");
    }
    // The same rows of E are rows of A, which at these labels are rows of
    // the weight-3 decomposition matrix.
    let small = d(3);
    let halves = partitions_of(3).unwrap();
    for (k, alpha) in halves.iter().enumerate() {
        for (c, mu) in e.cols().iter().enumerate() {
            let want = halves.iter().find(|b| dup_row(b, 7) == *mu).map_or(0, |b| {
                small.entry(&RowLabel::Part(alpha.clone()), b).unwrap()
            });
            assert_eq!(e.get(k, c), want, "{alpha} {mu}");
        }
    }
    // Every other row of E dominates the corresponding row of E A⁻¹.
    for (re, rea) in e.entries().iter().zip(ea.entries()) {
        assert!(re.iter().zip(rea).all(|(x, y)| x >= y && *y >= 0));
    }
}

#[test]
fn psi_small_goldens() {
    let block = RouquierBlock::new(3, 4).unwrap();
    assert_eq!(
        block.psi(&p("")).unwrap(),
        char_of(6, &["[3,2,1]", "<5,1>"])
    );
    // Printed as [5,1^4], which has the wrong size; (5,2,1^3) is the label
    // the branching actually produces.
    let expect = char_of(
        10,
        &[
            "[5,4,1]",
            "[5,2,1,1,1]",
            "[3,2,2,2,1]",
            "<9,1>",
            "<5,4,1>+",
            "<5,4,1>-",
        ],
    );
    assert_eq!(block.psi(&p("1,1")).unwrap(), expect);
    let expect = char_of(
        12,
        &[
            "[5,4,3]",
            "[5,4,1,1,1]",
            "[5,2,2,2,1]",
            "[3,3,3,2,1]",
            "<9,2,1>+",
            "<9,2,1>-",
            "<6,5,1>+",
            "<6,5,1>-",
        ],
    );
    assert_eq!(block.psi(&p("1,1,1")).unwrap(), expect);
}

/// Splits `ψ` into the listed part and a remainder, and checks the
/// remainder only has 2-singular ordinary labels and spin labels outside
/// `τ + 4β`.
fn check_psi_with_remainder(block: &RouquierBlock, mu: &str, listed: &[&str]) {
    let psi = block.psi(&p(mu)).unwrap();
    let mut rest = psi.clone();
    for s in listed {
        assert_eq!(psi.coeff(&label(s)), int(1), "ψ^({mu}) at {s}");
        rest = rest.sub(&FormalChar::from_label(label(s))).unwrap();
    }
    let tau_shapes: Vec<Partition> = partitions_of(block.weight() / 2)
        .unwrap()
        .iter()
        .map(|b| block.spin_label(b))
        .collect();
    for (l, c) in rest.terms() {
        assert!(*c > BigRational::zero(), "ψ^({mu}) has {c} at {l}");
        match l {
            CharLabel::Ord(nu) => assert!(!nu.is_two_regular(), "ψ^({mu}) leftover {l}"),
            _ => assert!(!tau_shapes.contains(l.partition()), "ψ^({mu}) leftover {l}"),
        }
    }
}

#[test]
fn psi_goldens_with_remainders() {
    let block = RouquierBlock::new(3, 4).unwrap();
    check_psi_with_remainder(
        &block,
        "2,2",
        &["[7,6,1]", "[7,4,3]", "[5,4,3,2]", "<13,1>", "<9,5>"],
    );
    check_psi_with_remainder(&block, "2,1,1", &["[7,4,3]", "[5,4,3,2]"]);
}

#[test]
fn psi_pairings() {
    for (c, w) in [(1, 2), (2, 3), (3, 4)] {
        let block = RouquierBlock::new(c, w).unwrap();
        for (mu, psi) in block.psi_all().unwrap() {
            assert!(psi_ordinary_pairings(&block, &psi, &mu).unwrap(), "{mu}");
            assert!(psi.is_nonnegative() && psi.has_integral_coefficients());
            assert!(psi.is_sign_symmetric());
            if w % 2 == 1 {
                continue;
            }
            for beta in partitions_of(w / 2).unwrap() {
                let spin = CharLabel::spin_labels(&block.spin_label(&beta))
                    .unwrap()
                    .remove(0);
                let got = psi.coeff(&spin);
                let want = partitions_of(w / 2)
                    .unwrap()
                    .into_iter()
                    .find(|a| a.duplicate() == mu)
                    .map_or(0, |alpha| e_to_schur(&alpha.conjugate()).coeff(&beta));
                assert_eq!(got, int(want), "ψ^{mu} at <τ+4{beta}>");
            }
        }
    }
}

#[test]
fn upsilon_pairings() {
    for (c, w) in [(1, 2), (3, 4)] {
        let block = RouquierBlock::new(c, w).unwrap();
        let sign = if (w / 2) % 2 == 0 { 1 } else { -1 };
        for lambda in partitions_of(w).unwrap() {
            let ups = block.upsilon(&lambda).unwrap();
            let h = h_to_schur(&lambda);
            for nu in partitions_of(w).unwrap() {
                let l = CharLabel::Ord(block.ordinary_label(&nu));
                assert_eq!(ups.coeff(&l), int(h.coeff(&nu)), "υ^{lambda} at {l}");
            }
            let gamma = lambda
                .parts()
                .iter()
                .all(|x| x % 2 == 0)
                .then(|| lambda.scale(1, 2).unwrap());
            for beta in partitions_of(w / 2).unwrap() {
                let spin = CharLabel::spin_labels(&block.spin_label(&beta))
                    .unwrap()
                    .remove(0);
                let want = gamma
                    .as_ref()
                    .map_or(0, |g| sign * h_to_schur(g).coeff(&beta));
                assert_eq!(ups.coeff(&spin), int(want), "υ^{lambda} at {spin}");
            }
        }
    }
}

#[test]
fn omega_through_upsilon_and_symmetry() {
    for (c, w) in [(1, 2), (3, 4)] {
        let block = RouquierBlock::new(c, w).unwrap();
        let family = block.omega_all().unwrap();
        let labels = family.coeffs.cols().to_vec();
        for lambda in &labels {
            let omega = &family.chars[lambda];
            for nu in &labels {
                let l = CharLabel::Ord(block.ordinary_label(nu));
                assert_eq!(omega.coeff(&l), int(i64::from(lambda == nu)));
            }
            let mut via_ups = FormalChar::zero(block.level());
            let lc = RowLabel::Part(lambda.conjugate());
            for mu in &labels {
                let a = family.coeffs.entry(&lc, &mu.conjugate()).unwrap();
                if a != 0 {
                    via_ups = via_ups
                        .add(&block.upsilon(mu).unwrap().scaled(&int(a)))
                        .unwrap();
                }
            }
            assert_eq!(&via_ups, omega, "ω^{lambda}");
            let sign = if (w / 2) % 2 == 0 { 1 } else { -1 };
            for beta in partitions_of(w / 2).unwrap() {
                let at = |om: &FormalChar, b: &Partition| {
                    let l = CharLabel::spin_labels(&block.spin_label(b))
                        .unwrap()
                        .remove(0);
                    om.coeff(&l)
                };
                let lhs = at(omega, &beta);
                let rhs = at(&family.chars[&lambda.conjugate()], &beta.conjugate());
                assert_eq!(lhs, rhs * int(sign), "ω^{lambda}, β={beta}");
            }
        }
    }
}

#[test]
fn induction_pairings_for_ordinary_labels() {
    for c in 1..=5 {
        let a = if c % 2 == 0 {
            spinmod::Residue::Zero
        } else {
            spinmod::Residue::One
        };
        for v in 1..=(c + 1) {
            let top = RouquierBlock::new(c, v).unwrap();
            for r in 1..=v {
                let bottom = RouquierBlock::new(c, v - r).unwrap();
                for xi in bottom.ordinary_labels().unwrap() {
                    let once = divided(
                        a,
                        r,
                        Direction::Induce,
                        &FormalChar::from_label(CharLabel::Ord(xi.clone())),
                    )
                    .unwrap();
                    let image = divided(a.flip(), r, Direction::Induce, &once).unwrap();
                    let kappa = partitions_of(v - r)
                        .unwrap()
                        .into_iter()
                        .find(|k| bottom.ordinary_label(k) == xi);
                    let product = kappa.map(|k| spinmod::symfun::SchurPoly::schur(k).mul_e(r));
                    for nu in partitions_of(v).unwrap() {
                        let got = image.coeff(&CharLabel::Ord(top.ordinary_label(&nu)));
                        let want = product.as_ref().map_or(0, |s| s.coeff(&nu));
                        assert_eq!(got, int(want), "c={c} r={r} ξ={xi} ν={nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn induction_pairings_for_spin_labels() {
    for c in 1..=5 {
        let a = if c % 2 == 0 {
            spinmod::Residue::Zero
        } else {
            spinmod::Residue::One
        };
        for v in (2..=(c + 1)).step_by(2) {
            let top = RouquierBlock::new(c, v).unwrap();
            for r in 1..=v {
                let bottom = RouquierBlock::new(c, v - r).unwrap();
                for xi in bottom.spin_partitions().unwrap() {
                    let start = CharLabel::spin_labels(&xi).unwrap().remove(0);
                    let once =
                        divided(a, r, Direction::Induce, &FormalChar::from_label(start)).unwrap();
                    let image = divided(a.flip(), r, Direction::Induce, &once).unwrap();
                    let alpha = if r % 2 == 0 {
                        partitions_of((v - r) / 2)
                            .unwrap()
                            .into_iter()
                            .find(|al| bottom.spin_label(al) == xi)
                    } else {
                        None
                    };
                    let product =
                        alpha.map(|al| spinmod::symfun::SchurPoly::schur(al).mul_e(r / 2));
                    for beta in partitions_of(v / 2).unwrap() {
                        let target = CharLabel::spin_labels(&top.spin_label(&beta))
                            .unwrap()
                            .remove(0);
                        let want = product.as_ref().map_or(0, |s| s.coeff(&beta));
                        assert_eq!(
                            image.coeff(&target),
                            int(want),
                            "c={c} r={r} ξ={xi} β={beta}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn restriction_between_adjacent_weights() {
    // The two-step restriction needs the core to be at least w - 1 long.
    for (c, w) in [(4, 5), (5, 5), (5, 6)] {
        let top = RouquierBlock::new(c, w).unwrap();
        let below = RouquierBlock::new(c, w - 1).unwrap();
        let sigma = top.core().clone();
        // Ordinary labels.
        for xi in top.ordinary_labels().unwrap() {
            let image =
                e_bullet(&sigma, &FormalChar::from_label(CharLabel::Ord(xi.clone()))).unwrap();
            for lambda in partitions_of(w - 1).unwrap() {
                let from_node = lambda
                    .addable_nodes()
                    .into_iter()
                    .any(|x| top.ordinary_label(&lambda.add_node(x).unwrap()) == xi);
                let from_column = below.ordinary_label(&lambda).union(&p("1,1")) == xi;
                let want = i64::from(from_node) + i64::from(from_column);
                let got = image.coeff(&CharLabel::Ord(below.ordinary_label(&lambda)));
                assert_eq!(got, int(want), "σ={sigma} ξ={xi} λ={lambda}");
            }
        }
        if w % 2 == 0 {
            continue;
        }
        // Spin labels.
        for pi in top.spin_partitions().unwrap() {
            let start = CharLabel::spin_labels(&pi).unwrap().remove(0);
            let image = e_bullet(&sigma, &FormalChar::from_label(start)).unwrap();
            for alpha in partitions_of((w - 1) / 2).unwrap() {
                let want = i64::from(top.spin_pair_label(&alpha, &p("1")) == pi);
                let got = image.spin_total(&below.spin_label(&alpha)).unwrap();
                assert_eq!(got, int(want), "σ={sigma} π={pi} α={alpha}");
            }
        }
    }
}

#[test]
fn restriction_of_omega() {
    let top = RouquierBlock::new(4, 5).unwrap();
    let below = RouquierBlock::new(4, 4).unwrap();
    let upper = top.omega_all().unwrap();
    let lower = below.omega_all().unwrap();
    let half = BigRational::new(1.into(), 2.into());
    for (mu, omega) in &upper.chars {
        let restricted = e_bullet(top.core(), omega).unwrap();
        let mut expect = FormalChar::zero(below.level());
        for x in mu.removable_nodes() {
            let lambda = mu.remove_node(x).unwrap();
            expect = expect.add(&lower.chars[&lambda].scaled(&int(2))).unwrap();
        }
        assert_eq!(restricted, expect, "ω^{mu}");
        for alpha in partitions_of(2).unwrap() {
            let row = CharLabel::spin_labels(&top.spin_pair_label(&alpha, &p("1"))).unwrap();
            let halved = restricted.spin_total(&below.spin_label(&alpha)).unwrap() * half.clone();
            for l in row {
                assert_eq!(omega.coeff(&l), halved, "ω^{mu} at {l}");
            }
        }
    }
}
