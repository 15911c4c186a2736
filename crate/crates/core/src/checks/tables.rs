//! Arrays and families of arrays known not to belong to any graph.

use drg_exact::Rat;

use crate::array::IntersectionArray;

/// Single arrays with a nonexistence result, with reference tags.
pub const SPORADIC: &[(&str, &[&str])] = &[
    ("{14, 12; 1, 4}", &["WilbrinkBrouwer83"]),
    ("{16, 12; 1, 6}", &["BussemakerEtAl89"]),
    ("{21, 18; 1, 7}", &["Haemers93"]),
    ("{30, 21; 1, 14}", &["BondarenkoPrymakRadchenko17"]),
    ("{32, 21; 1, 16}", &["AzarijaMarc18"]),
    ("{38, 27; 1, 18}", &["Degraer07"]),
    ("{40, 27; 1, 20}", &["AzarijaMarc16"]),
    ("{57, 56; 1, 12}", &["GavrilyukMakhnev05"]),
    ("{67, 56; 1, 2}", &["BrouwerNeumaier81"]),
    ("{116, 115; 1, 20}", &["Makhnev17"]),
    ("{153, 120; 1, 60}", &["BondarenkoEtAl18"]),
    ("{165, 128; 1, 66}", &["Makhnev02"]),
    ("{486, 320; 1, 243}", &["Makhnev02"]),
    ("{5, 4, 3; 1, 1, 2}", &["FonDerFlaass93b"]),
    ("{11, 10, 10; 1, 1, 11}", &["LamThielSwiercz89"]),
    ("{13, 10, 7; 1, 2, 7}", &["Coolsaet95"]),
    ("{18, 12, 1; 1, 2, 18}", &["BCN89", "PayneThas09"]),
    ("{20, 10, 10; 1, 1, 2}", &["LamThielSwiercz89"]),
    ("{21, 16, 8; 1, 4, 14}", &["Coolsaet05"]),
    ("{22, 16, 5; 1, 2, 20}", &["SumalrojWorawannotai16"]),
    ("{27, 20, 10; 1, 2, 18}", &["BrouwerSumalrojWorawannotai16"]),
    ("{36, 28, 4; 1, 2, 24}", &["BrouwerSumalrojWorawannotai16"]),
    ("{39, 24, 1; 1, 4, 39}", &["BangGavrilyukKoolen18"]),
    ("{45, 30, 7; 1, 2, 27}", &["GavrilyukMakhnev13"]),
    ("{52, 35, 16; 1, 4, 28}", &["GavrilyukMakhnev12"]),
    ("{55, 36, 11; 1, 4, 45}", &["Gavrilyuk11"]),
    ("{56, 36, 9; 1, 3, 48}", &["Gavrilyuk11"]),
    ("{69, 48, 24; 1, 4, 46}", &["GavrilyukMakhnev12"]),
    ("{74, 54, 15; 1, 9, 60}", &["CoolsaetJurisic08"]),
    ("{105, 102, 99; 1, 2, 35}", &["DeBruynVanhove15"]),
    ("{130, 96, 18; 1, 12, 117}", &["JurisicVidali17"]),
    ("{135, 128, 16; 1, 16, 120}", &["cert-g1360"]),
    ("{234, 165, 12; 1, 30, 198}", &["cert-g1600"]),
    ("{4818, 4248, 192; 1, 72, 4672}", &["JurisicVidali17"]),
    ("{5928, 5920, 5888; 1, 5, 741}", &["DeBruynVanhove15"]),
    (
        "{120939612, 120939520, 120933632; 1, 65, 1314561}",
        &["DeBruynVanhove15"],
    ),
    ("{97571175, 97571080, 97569275; 1, 20, 1027065}", &["DeBruynVanhove15"]),
    (
        "{290116365, 290116260, 290100825; 1, 148, 2763013}",
        &["DeBruynVanhove15"],
    ),
    ("{5, 4, 3, 3; 1, 1, 1, 2}", &["FonDerFlaass93a"]),
    ("{10, 9, 1, 1; 1, 1, 9, 10}", &["BCN89"]),
    ("{32, 27, 6, 1; 1, 6, 27, 32}", &["Soicher17"]),
    ("{32, 27, 9, 1; 1, 3, 27, 32}", &["Soicher17"]),
    ("{56, 45, 20, 1; 1, 4, 45, 56}", &["BCN89"]),
    ("{55, 54, 50, 35, 10; 1, 5, 20, 45, 55}", &["cert-bip5"]),
    ("{15, 14, 12, 6, 1, 1; 1, 1, 3, 12, 14, 15}", &["IvanovShpectorov90"]),
];

/// Reference tags of a sporadic array, if listed.
pub fn sporadic(ia: &IntersectionArray) -> Option<&'static [&'static str]> {
    let text = ia.to_string();
    SPORADIC.iter().find(|(a, _)| *a == text).map(|(_, tags)| *tags)
}

type Sequences = (Vec<Rat>, Vec<Rat>);

/// An infinite family of arrays in one or two integer parameters.
pub struct Family {
    pub name: &'static str,
    pub tag: &'static str,
    pub pattern: fn(&Rat, &Rat) -> Sequences,
    /// Candidate parameters `(r, t)` for an array.
    solve: fn(&IntersectionArray) -> Vec<(Rat, Rat)>,
    allowed: fn(&Rat, &Rat) -> bool,
}

fn n(x: i64) -> Rat {
    Rat::from(x)
}

fn int_ge(x: &Rat, min: i64) -> bool {
    x.is_integer() && *x >= n(min)
}

/// Integer `r >= min` with `f(r) = target` for increasing `f`.
fn invert(target: &Rat, min: i64, f: impl Fn(&Rat) -> Rat) -> Option<Rat> {
    let mut lo = n(min);
    if f(&lo) > *target {
        return None;
    }
    let mut hi = n(min.max(1));
    while f(&hi) < *target {
        hi = &hi * n(2);
    }
    while lo < hi {
        let mid = Rat::from_int((&lo + &hi).floor() / 2);
        if f(&mid) < *target {
            lo = mid + Rat::one();
        } else {
            hi = mid;
        }
    }
    (f(&lo) == *target).then_some(lo)
}

fn one_param(ia: &IntersectionArray, min: i64, pattern: fn(&Rat, &Rat) -> Sequences) -> Vec<(Rat, Rat)> {
    let t = Rat::zero();
    invert(&ia.b(0), min, |r| pattern(r, &t).0[0].clone())
        .map(|r| vec![(r, t.clone())])
        .unwrap_or_default()
}

fn bondarenko_radchenko(r: &Rat, _t: &Rat) -> Sequences {
    let one = Rat::one();
    (
        vec![r * r * (r + n(3)), (r + &one) * (r * r + n(2) * r - n(2))],
        vec![one.clone(), r * (r + &one)],
    )
}

fn jv_first(r: &Rat, _t: &Rat) -> Sequences {
    let r2 = r * r;
    (
        vec![
            (n(2) * &r2 - n(1)) * (n(2) * r + n(1)),
            n(4) * r * (&r2 - n(1)),
            n(2) * &r2,
        ],
        vec![n(1), n(2) * (&r2 - n(1)), r * (n(4) * &r2 - n(2))],
    )
}

fn jv_second(r: &Rat, _t: &Rat) -> Sequences {
    let r2 = r * r;
    (
        vec![
            n(2) * &r2 * (n(2) * r + n(1)),
            (n(2) * r - n(1)) * (n(2) * &r2 + r + n(1)),
            n(2) * &r2,
        ],
        vec![n(1), n(2) * &r2, r * (n(4) * &r2 - n(1))],
    )
}

fn coolsaet_jurisic(r: &Rat, _t: &Rat) -> Sequences {
    let r2 = r * r;
    let q = n(2) * &r2 + n(2) * r + n(1);
    (
        vec![
            n(4) * &r2 * r + n(8) * &r2 + n(6) * r + n(1),
            n(2) * r * (r + n(1)) * (n(2) * r + n(1)),
            q.clone(),
        ],
        vec![n(1), n(2) * r * (r + n(1)), (n(2) * r + n(1)) * q],
    )
}

fn fameven(r: &Rat, t: &Rat) -> Sequences {
    let m = (r + t) * (n(4) * r + n(1));
    (
        vec![
            (n(2) * r + n(1)) * (n(4) * r + n(1)) * (n(4) * t - n(1)),
            n(8) * r * (n(4) * r * t - r + n(2) * t),
            m.clone(),
        ],
        vec![n(1), m, n(4) * r * (n(2) * r + n(1)) * (n(4) * t - n(1))],
    )
}

fn urlep(r: &Rat, _t: &Rat) -> Sequences {
    let r2 = r * r;
    let q = &r2 + r - n(1);
    (
        vec![(r + n(1)) * (&r2 * r - n(1)), r * (r - n(1)) * &q, &r2 - n(1)],
        vec![n(1), r * (r + n(1)), (&r2 - n(1)) * q],
    )
}

fn jurisic_koolen(r: &Rat, t: &Rat) -> Sequences {
    let r2 = r * r;
    let top = &r2 * (r * t + t + n(1));
    let mid = (&r2 - n(1)) * (r * t + n(1));
    (
        vec![top.clone(), mid.clone(), r * (r - n(1)) * (t + n(1)), n(1)],
        vec![n(1), r * (t + n(1)), mid, top],
    )
}

fn cjk(r: &Rat, _t: &Rat) -> Sequences {
    let r2 = r * r;
    let top = n(2) * &r2 + r;
    (
        vec![top.clone(), &top - n(1), r2.clone(), r.clone(), n(1)],
        vec![n(1), r.clone(), r2, top.clone() - n(1), top],
    )
}

pub const FAMILIES: &[Family] = &[
    Family {
        name: "{r^2 (r+3), (r+1)(r^2+2r-2); 1, r(r+1)}",
        tag: "BondarenkoRadchenko13",
        pattern: bondarenko_radchenko,
        solve: |ia| one_param(ia, 3, bondarenko_radchenko),
        allowed: |r, _| int_ge(r, 3) && *r != n(4),
    },
    Family {
        name: "{(2r^2-1)(2r+1), 4r(r^2-1), 2r^2; 1, 2(r^2-1), r(4r^2-2)}",
        tag: "JurisicVidali12",
        pattern: jv_first,
        solve: |ia| one_param(ia, 2, jv_first),
        allowed: |r, _| int_ge(r, 2),
    },
    Family {
        name: "{2r^2(2r+1), (2r-1)(2r^2+r+1), 2r^2; 1, 2r^2, r(4r^2-1)}",
        tag: "JurisicVidali12",
        pattern: jv_second,
        solve: |ia| one_param(ia, 2, jv_second),
        allowed: |r, _| int_ge(r, 2),
    },
    Family {
        name: "{4r^3+8r^2+6r+1, 2r(r+1)(2r+1), 2r^2+2r+1; 1, 2r(r+1), (2r+1)(2r^2+2r+1)}",
        tag: "CoolsaetJurisic08",
        pattern: coolsaet_jurisic,
        solve: |ia| one_param(ia, 1, coolsaet_jurisic),
        allowed: |r, _| int_ge(r, 1),
    },
    Family {
        name: "{(2r+1)(4r+1)(4t-1), 8r(4rt-r+2t), (r+t)(4r+1); 1, (r+t)(4r+1), 4r(2r+1)(4t-1)}",
        tag: "cert-fameven",
        pattern: fameven,
        solve: |ia| {
            // c_3 / b_0 = 4r / (4r + 1)
            if ia.diameter() != 3 || ia.b(0) == ia.c(3) {
                return Vec::new();
            }
            let r = ia.c(3) / (n(4) * (ia.b(0) - ia.c(3)));
            let t = (ia.b(0) / ((n(2) * &r + n(1)) * (n(4) * &r + n(1))) + n(1)) / n(4);
            vec![(r, t)]
        },
        allowed: |r, t| int_ge(r, 1) && int_ge(t, 1),
    },
    Family {
        name: "{(r+1)(r^3-1), r(r-1)(r^2+r-1), r^2-1; 1, r(r+1), (r^2-1)(r^2+r-1)}",
        tag: "Urlep12",
        pattern: urlep,
        solve: |ia| one_param(ia, 3, urlep),
        allowed: |r, _| int_ge(r, 3),
    },
    Family {
        name: "{r^2(rt+t+1), (r^2-1)(rt+1), r(r-1)(t+1), 1; 1, r(t+1), (r^2-1)(rt+1), r^2(rt+t+1)}",
        tag: "JurisicKoolen11",
        pattern: jurisic_koolen,
        solve: |ia| {
            // b_2 / c_2 = r - 1
            if ia.diameter() != 4 {
                return Vec::new();
            }
            let r = ia.b(2) / ia.c(2) + n(1);
            let t = ia.c(2) / &r - n(1);
            vec![(r, t)]
        },
        allowed: |r, t| {
            let excluded = [(3, 1), (3, 3), (4, 2)].iter().any(|&(a, b)| *r == n(a) && *t == n(b));
            int_ge(r, 3) && int_ge(t, 1) && !excluded
        },
    },
    Family {
        name: "{2r^2+r, 2r^2+r-1, r^2, r, 1; 1, r, r^2, 2r^2+r-1, 2r^2+r}",
        tag: "CoolsaetJurisicKoolen08",
        pattern: cjk,
        solve: |ia| one_param(ia, 2, cjk),
        allowed: |r, _| int_ge(r, 2),
    },
];

impl Family {
    /// Parameters `(r, t)` under which the family produces `ia`; `t` is
    /// zero for one-parameter families.
    pub fn matches(&self, ia: &IntersectionArray) -> Option<(Rat, Rat)> {
        (self.solve)(ia).into_iter().find(|(r, t)| {
            (self.allowed)(r, t) && {
                let (b, c) = (self.pattern)(r, t);
                b == ia.b_table() && c == ia.c_table()
            }
        })
    }
}

/// Classical parameter families with a nonexistence result.
pub fn classical_family(ia: &IntersectionArray) -> Option<(String, &'static str)> {
    for p in ia.classical_params() {
        if p.d < 4 {
            continue;
        }
        let d = p.d as i32;
        let minus_two = n(-2);
        if p.b == minus_two && p.alpha == minus_two && p.beta == (minus_two.pow(d + 1) - n(1)) / n(3) {
            return Some((format!("classical parameters {p}"), "HuangPanWeng15"));
        }
        let r = -p.b.clone();
        if int_ge(&r, 2) {
            let alpha = -(&r / (&r - n(1)));
            let beta = &r + &r * &r * ((-&r).pow(d - 1) - n(1)) / (&r * &r - n(1));
            if p.alpha == alpha && p.beta == beta {
                return Some((format!("classical parameters {p}"), "DeBruynVanhove15"));
            }
        }
    }
    None
}
