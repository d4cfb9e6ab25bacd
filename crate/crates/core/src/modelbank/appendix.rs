//! Coefficient tables of the sixth-order G2 integral at `omega = 0`, as
//! `(coefficient, a, b)` rows for `coefficient * d^a/du^a d^b/dv^b`.
//! `n` is the parameter nu.

pub const K_A2_SQUARED: &[(&str, u32, u32)] = &[
    // order 6
    ("v", 6, 0),
    ("-8/3*u^2*v", 5, 1),
    ("8/9*u*v*(2*u^3 - 9*v)", 4, 2),
    ("16/27*v^2*(16*u^3 - 27*v)", 3, 3),
    ("16/81*u^2*v^2*(8*u^3 + 189*v)", 2, 4),
    ("64/27*u*v^3*(2*u^3 + 27*v)", 1, 5),
    ("64/729*v^3*(4*u^6 + 108*u^3*v + 729*v^2)", 0, 6),
    // order 5
    ("-2/3*u^2", 5, 0),
    ("8/9*u*(u^3 - 3*(3*n + 8)*v)", 4, 1),
    ("8/9*v*(2*(6*n + 17)*u^3 - 9*(3*n + 8)*v)", 3, 2),
    ("16/27*u^2*v*(8*u^3 + 9*(12*n + 37)*v)", 2, 3),
    ("32/81*u*v^2*((12*n + 89)*u^3 + 27*(15*n + 52)*v)", 1, 4),
    ("32/243*v^2*(20*u^6 + 18*(6*n + 43)*v*u^3 + 243*(6*n + 25)*v^2)", 0, 5),
    // order 4
    ("-2/3*u*(3*n + 2)", 4, 0),
    ("4/9*(6*(3 + 2*n)*u^3 - (9*n*(2*n + 11) + 103)*v)", 3, 1),
    ("4/27*u^2*(8*u^3 + (180*n^2 + 1116*n + 1345)*v)", 2, 2),
    ("16/27*u*v*(8*(3*n + 11)*u^3 + 3*(72*n^2 + 450*n + 631)*v)", 1, 3),
    ("16/243*v*(60*u^6 + 2*(36*n^2 + 711*n + 2168)*v*u^3 + 27*(117*n^2 + 873*n + 1529)*v^2)", 0, 4),
    // order 3
    ("-2/9*(3*n + 2)*(3*n + 1)", 3, 0),
    ("8/27*u^2*(45*n^2 + 117*n + 73)", 2, 1),
    ("8/27*u*((12*n + 29)*u^3 + (108*n^3 + 990*n^2 + 2355*n + 1594)*v)", 1, 2),
    ("8/243*(20*u^6 + 27*(108*n^3 + 1080*n^2 + 3210*n + 2957)*v^2 + 6*(72*n^2 + 612*n + 1051)*v*u^3)", 0, 3),
    // order 2
    ("8/27*(3*n + 2)*(3*n + 5)*(6*n + 5)*u", 1, 1),
    ("4/81*((324*n^4 + 4050*n^3 + 14643*n^2 + 20421*n + 9592)*v + (72*n^2 + 342*n + 376)*u^3)", 0, 2),
    // order 1
    ("4/81*(3*n + 2)^2*(3*n + 1)*(6*n + 11)", 0, 1),
];

pub const K1: &[(&str, u32, u32)] = &[
    ("-4*u^2", 5, 0),
    ("16/3*u*(u^3 - 3*v)", 4, 1),
    ("16*v*(2*u^3 - 3*v)", 3, 2),
    ("32/27*u^2*v*(8*u^3 + 135*v)", 2, 3),
    ("64/27*u*v^2*(13*u^3 + 135*v)", 1, 4),
    ("128/81*v^2*(u^3 + 9*v)*(2*u^3 + 27*v)", 0, 5),
    ("-12*(n + 1)*u", 4, 0),
    ("8/9*(4*(9*n + 14)*u^3 - 9*(7*n + 8)*v)", 3, 1),
    ("64/27*u^2*(4*u^3 + 9*(11*n + 20)*v)", 2, 2),
    ("64/27*u*v*(4*(3*n + 14)*u^3 + 27*(11*n + 26)*v)", 1, 3),
    ("32/81*v*(32*u^6 + 6*(41*n + 199)*v*u^3 + 81*(32*n + 97)*v^2)", 0, 4),
    ("-4/3*(9*n^2 + 15*n + 5)", 3, 0),
    ("16/9*(45*n^2 + 129*n + 85)*u^2", 2, 1),
    ("16/27*u*((48*n + 119)*u^3 + 3*(270*n^2 + 966*n + 845)*v)", 1, 2),
    ("32/243*(46*u^6 + 3*(72*n^2 + 864*n + 1717)*v*u^3 + 243*(30*n^2 + 147*n + 179)*v^2)", 0, 3),
    ("16/3*(18*n^3 + 66*n^2 + 72*n + 25)*u", 1, 1),
    ("8/81*(2*(48*n + 163)*(3*n + 5)*u^3 + 9*(414*n^3 + 2268*n^2 + 3962*n + 2293)*v)", 0, 2),
    ("8/27*(3*n + 2)*(54*n^3 + 198*n^2 + 189*n + 52)", 0, 1),
];

pub const K2: &[(&str, u32, u32)] = &[
    ("-24*u", 4, 0),
    ("16/3*(2*u^3 - 15*v)", 3, 1),
    ("16/9*u^2*(8*u^3 + 69*v)", 2, 2),
    ("64/9*u*v*(8*u^3 + 45*v)", 1, 3),
    ("128/27*(2*u^6*v + 37*u^3*v^2 + 135*v^3)", 0, 4),
    ("-16*(3*n + 2)", 3, 0),
    ("32/3*(12*n + 11)*u^2", 2, 1),
    ("32/3*((4*n + 11)*u^4 + (63*n + 86)*v*u)", 1, 2),
    ("32/9*(4*u^6 + 2*(28*n + 85)*v*u^3 + 27*(16*n + 31)*v^2)", 0, 3),
    ("32/3*(27*n^2 + 51*n + 23)*u", 1, 1),
    ("16/27*(2*(36*n^2 + 231*n + 275)*u^3 + 3*(621*n^2 + 1809*n + 1327)*v)", 0, 2),
    ("16/9*(135*n^3 + 351*n^2 + 273*n + 71)", 0, 1),
];

pub const K3: &[(&str, u32, u32)] = &[
    ("-48", 3, 0),
    ("-64*u^2", 2, 1),
    ("64/3*u*(u^3 - 15*v)", 1, 2),
    ("128/27*u^3*(2*u^3 + 33*v)", 0, 3),
    ("-192*u", 1, 1),
    ("32/9*(10*(3*n + 5)*u^3 + 9*(16*n - 1)*v)", 0, 2),
    ("32/3*(9*n + 5)*(3*n + 1)", 0, 1),
];

pub const K4: &[(&str, u32, u32)] = &[
    ("-384*u", 1, 1),
    ("64/3*(2*u^3 - 33*v)", 0, 2),
    ("-64*(3*n + 7)", 0, 1),
];

pub const K5: &[(&str, u32, u32)] = &[("-384", 0, 1)];
