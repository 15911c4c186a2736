use drg::IntersectionArray;

fn arr(s: &str) -> IntersectionArray {
    s.parse().unwrap()
}

#[test]
fn seven_cube_distance_graphs() {
    let q7 = arr("{7,6,5,4,3,2,1;1,2,3,4,5,6,7}");
    let expected: Vec<(Vec<usize>, &str)> = vec![
        (vec![1, 2], "{28, 15, 6, 1; 1, 6, 15, 28}"),
        (vec![1, 2, 3, 4, 5, 6], "{126, 1; 1, 126}"),
        (vec![1, 3, 5], "{63, 62, 1; 1, 62, 63}"),
        (vec![1, 3, 5, 7], "{64, 63; 1, 64}"),
        (vec![1, 4, 5], "{63, 32, 1; 1, 32, 63}"),
        (vec![1, 5], "{28, 27, 16; 1, 12, 28}"),
        (vec![1, 7], "{8, 7, 6, 5; 1, 2, 3, 8}"),
        (vec![2], "{21, 10, 3; 1, 6, 15}"),
        (vec![2, 3, 6], "{63, 30, 1; 1, 30, 63}"),
        (vec![2, 4, 6], "{63; 1}"),
        (vec![2, 6], "{28, 15; 1, 12}"),
        (vec![3, 7], "{36, 35, 16; 1, 20, 36}"),
        (vec![4], "{35, 16; 1, 20}"),
        (vec![6], "{7, 6, 5; 1, 2, 3}"),
        (vec![7], "{1; 1}"),
    ];
    let got: Vec<(Vec<usize>, String)> = q7
        .distance_graphs()
        .into_iter()
        .map(|(s, ia)| (s, ia.to_string()))
        .collect();
    let want: Vec<(Vec<usize>, String)> = expected.into_iter().map(|(s, t)| (s, t.to_string())).collect();
    assert_eq!(got, want);
}

#[test]
fn half_and_quotient_orders() {
    let q7 = arr("{7,6,5,4,3,2,1;1,2,3,4,5,6,7}");
    let two = drg_exact::Rat::from(2);
    assert_eq!(q7.bipartite_half().unwrap().order() * &two, *q7.order());
    assert_eq!(q7.antipodal_quotient().unwrap().order() * &two, *q7.order());
}

#[test]
fn srg_complement_is_involutive() {
    for s in ["{3,2;1,1}", "{6,2;1,4}", "{10,6;1,4}", "{8,3;1,4}"] {
        let ia = arr(s);
        if let Ok(c) = ia.complement() {
            assert_eq!(c.complement().unwrap(), ia, "{s}");
        }
    }
}
