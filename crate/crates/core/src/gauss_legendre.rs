//! Gauss–Legendre nodes and weights on [-1, 1] for 1 to 16 points.
//!
//! Generated offline at 50-digit precision, rounded to 25 significant digits.

#![allow(clippy::excessive_precision, clippy::unreadable_literal)]

/// Largest rule available.
pub const MAX_POINTS: usize = 16;

const NODES_1: [f64; 1] = [0.0];
const WEIGHTS_1: [f64; 1] = [2.0];

const NODES_2: [f64; 2] = [-0.5773502691896257645091488, 0.5773502691896257645091488];
const WEIGHTS_2: [f64; 2] = [1.0, 1.0];

const NODES_3: [f64; 3] = [
    -0.7745966692414833770358531,
    0.0,
    0.7745966692414833770358531,
];
const WEIGHTS_3: [f64; 3] = [
    0.5555555555555555555555556,
    0.8888888888888888888888889,
    0.5555555555555555555555556,
];

const NODES_4: [f64; 4] = [
    -0.8611363115940525752239465,
    -0.3399810435848562648026658,
    0.3399810435848562648026658,
    0.8611363115940525752239465,
];
const WEIGHTS_4: [f64; 4] = [
    0.3478548451374538573730639,
    0.6521451548625461426269361,
    0.6521451548625461426269361,
    0.3478548451374538573730639,
];

const NODES_5: [f64; 5] = [
    -0.9061798459386639927976269,
    -0.5384693101056830910363144,
    0.0,
    0.5384693101056830910363144,
    0.9061798459386639927976269,
];
const WEIGHTS_5: [f64; 5] = [
    0.236926885056189087514264,
    0.4786286704993664680412915,
    0.5688888888888888888888889,
    0.4786286704993664680412915,
    0.236926885056189087514264,
];

const NODES_6: [f64; 6] = [
    -0.9324695142031520278123016,
    -0.6612093864662645136613996,
    -0.2386191860831969086305017,
    0.2386191860831969086305017,
    0.6612093864662645136613996,
    0.9324695142031520278123016,
];
const WEIGHTS_6: [f64; 6] = [
    0.1713244923791703450402961,
    0.3607615730481386075698335,
    0.4679139345726910473898703,
    0.4679139345726910473898703,
    0.3607615730481386075698335,
    0.1713244923791703450402961,
];

const NODES_7: [f64; 7] = [
    -0.9491079123427585245261897,
    -0.7415311855993944398638648,
    -0.4058451513773971669066064,
    0.0,
    0.4058451513773971669066064,
    0.7415311855993944398638648,
    0.9491079123427585245261897,
];
const WEIGHTS_7: [f64; 7] = [
    0.1294849661688696932706114,
    0.2797053914892766679014678,
    0.3818300505051189449503698,
    0.417959183673469387755102,
    0.3818300505051189449503698,
    0.2797053914892766679014678,
    0.1294849661688696932706114,
];

const NODES_8: [f64; 8] = [
    -0.9602898564975362316835609,
    -0.7966664774136267395915539,
    -0.525532409916328985817739,
    -0.1834346424956498049394761,
    0.1834346424956498049394761,
    0.525532409916328985817739,
    0.7966664774136267395915539,
    0.9602898564975362316835609,
];
const WEIGHTS_8: [f64; 8] = [
    0.1012285362903762591525314,
    0.222381034453374470544356,
    0.3137066458778872873379622,
    0.3626837833783619829651504,
    0.3626837833783619829651504,
    0.3137066458778872873379622,
    0.222381034453374470544356,
    0.1012285362903762591525314,
];

const NODES_9: [f64; 9] = [
    -0.9681602395076260898355762,
    -0.8360311073266357942994298,
    -0.613371432700590397308702,
    -0.324253423403808929038538,
    0.0,
    0.324253423403808929038538,
    0.613371432700590397308702,
    0.8360311073266357942994298,
    0.9681602395076260898355762,
];
const WEIGHTS_9: [f64; 9] = [
    0.08127438836157441197189216,
    0.180648160694857404058472,
    0.2606106964029354623187429,
    0.3123470770400028400686304,
    0.3302393550012597631645251,
    0.3123470770400028400686304,
    0.2606106964029354623187429,
    0.180648160694857404058472,
    0.08127438836157441197189216,
];

const NODES_10: [f64; 10] = [
    -0.973906528517171720077964,
    -0.8650633666889845107320967,
    -0.6794095682990244062343274,
    -0.4333953941292471907992659,
    -0.148874338981631210884826,
    0.148874338981631210884826,
    0.4333953941292471907992659,
    0.6794095682990244062343274,
    0.8650633666889845107320967,
    0.973906528517171720077964,
];
const WEIGHTS_10: [f64; 10] = [
    0.06667134430868813759356881,
    0.1494513491505805931457763,
    0.2190863625159820439955349,
    0.2692667193099963550912269,
    0.295524224714752870173893,
    0.295524224714752870173893,
    0.2692667193099963550912269,
    0.2190863625159820439955349,
    0.1494513491505805931457763,
    0.06667134430868813759356881,
];

const NODES_11: [f64; 11] = [
    -0.978228658146056992803938,
    -0.8870625997680952990751578,
    -0.7301520055740493240934163,
    -0.5190961292068118159257257,
    -0.269543155952344972331532,
    0.0,
    0.269543155952344972331532,
    0.5190961292068118159257257,
    0.7301520055740493240934163,
    0.8870625997680952990751578,
    0.978228658146056992803938,
];
const WEIGHTS_11: [f64; 11] = [
    0.05566856711617366648275372,
    0.1255803694649046246346943,
    0.1862902109277342514260976,
    0.2331937645919904799185237,
    0.2628045445102466621806889,
    0.2729250867779006307144835,
    0.2628045445102466621806889,
    0.2331937645919904799185237,
    0.1862902109277342514260976,
    0.1255803694649046246346943,
    0.05566856711617366648275372,
];

const NODES_12: [f64; 12] = [
    -0.9815606342467192506905491,
    -0.9041172563704748566784659,
    -0.7699026741943046870368938,
    -0.5873179542866174472967024,
    -0.3678314989981801937526915,
    -0.1252334085114689154724414,
    0.1252334085114689154724414,
    0.3678314989981801937526915,
    0.5873179542866174472967024,
    0.7699026741943046870368938,
    0.9041172563704748566784659,
    0.9815606342467192506905491,
];
const WEIGHTS_12: [f64; 12] = [
    0.04717533638651182719461596,
    0.1069393259953184309602547,
    0.1600783285433462263346525,
    0.2031674267230659217490645,
    0.2334925365383548087608499,
    0.2491470458134027850005624,
    0.2491470458134027850005624,
    0.2334925365383548087608499,
    0.2031674267230659217490645,
    0.1600783285433462263346525,
    0.1069393259953184309602547,
    0.04717533638651182719461596,
];

const NODES_13: [f64; 13] = [
    -0.9841830547185881494728294,
    -0.9175983992229779652065478,
    -0.8015780907333099127942065,
    -0.6423493394403402206439846,
    -0.4484927510364468528779129,
    -0.2304583159551347940655281,
    0.0,
    0.2304583159551347940655281,
    0.4484927510364468528779129,
    0.6423493394403402206439846,
    0.8015780907333099127942065,
    0.9175983992229779652065478,
    0.9841830547185881494728294,
];
const WEIGHTS_13: [f64; 13] = [
    0.04048400476531587952002159,
    0.09212149983772844791442178,
    0.1388735102197872384636018,
    0.1781459807619457382800467,
    0.2078160475368885023125232,
    0.2262831802628972384120902,
    0.2325515532308739101945895,
    0.2262831802628972384120902,
    0.2078160475368885023125232,
    0.1781459807619457382800467,
    0.1388735102197872384636018,
    0.09212149983772844791442178,
    0.04048400476531587952002159,
];

const NODES_14: [f64; 14] = [
    -0.9862838086968123388415973,
    -0.9284348836635735173363911,
    -0.8272013150697649931897947,
    -0.6872929048116854701480198,
    -0.5152486363581540919652907,
    -0.3191123689278897604356718,
    -0.1080549487073436620662447,
    0.1080549487073436620662447,
    0.3191123689278897604356718,
    0.5152486363581540919652907,
    0.6872929048116854701480198,
    0.8272013150697649931897947,
    0.9284348836635735173363911,
    0.9862838086968123388415973,
];
const WEIGHTS_14: [f64; 14] = [
    0.03511946033175186303183288,
    0.08015808715976020980563328,
    0.1215185706879031846894148,
    0.1572031671581935345696019,
    0.1855383974779378137417166,
    0.2051984637212956039659241,
    0.2152638534631577901958764,
    0.2152638534631577901958764,
    0.2051984637212956039659241,
    0.1855383974779378137417166,
    0.1572031671581935345696019,
    0.1215185706879031846894148,
    0.08015808715976020980563328,
    0.03511946033175186303183288,
];

const NODES_15: [f64; 15] = [
    -0.9879925180204854284895657,
    -0.9372733924007059043077589,
    -0.8482065834104272162006483,
    -0.7244177313601700474161861,
    -0.5709721726085388475372267,
    -0.3941513470775633698972074,
    -0.2011940939974345223006283,
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657,
];
const WEIGHTS_15: [f64; 15] = [
    0.03075324199611726835462839,
    0.07036604748810812470926742,
    0.1071592204671719350118695,
    0.1395706779261543144478048,
    0.1662692058169939335532009,
    0.1861610000155622110268006,
    0.1984314853271115764561183,
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.07036604748810812470926742,
    0.03075324199611726835462839,
];

const NODES_16: [f64; 16] = [
    -0.9894009349916499325961542,
    -0.9445750230732325760779884,
    -0.8656312023878317438804679,
    -0.7554044083550030338951012,
    -0.6178762444026437484466718,
    -0.4580167776572273863424194,
    -0.2816035507792589132304605,
    -0.09501250983763744018531934,
    0.09501250983763744018531934,
    0.2816035507792589132304605,
    0.4580167776572273863424194,
    0.6178762444026437484466718,
    0.7554044083550030338951012,
    0.8656312023878317438804679,
    0.9445750230732325760779884,
    0.9894009349916499325961542,
];
const WEIGHTS_16: [f64; 16] = [
    0.02715245941175409485178057,
    0.06225352393864789286284384,
    0.09515851168249278480992511,
    0.1246289712555338720524763,
    0.1495959888165767320815017,
    0.1691565193950025381893121,
    0.1826034150449235888667637,
    0.1894506104550684962853967,
    0.1894506104550684962853967,
    0.1826034150449235888667637,
    0.1691565193950025381893121,
    0.1495959888165767320815017,
    0.1246289712555338720524763,
    0.09515851168249278480992511,
    0.06225352393864789286284384,
    0.02715245941175409485178057,
];

/// Returns `(nodes, weights)` of the `points`-point rule, or `None` if
/// `points` is zero or exceeds [`MAX_POINTS`].
pub fn rule(points: usize) -> Option<(&'static [f64], &'static [f64])> {
    let rule: (&[f64], &[f64]) = match points {
        1 => (&NODES_1, &WEIGHTS_1),
        2 => (&NODES_2, &WEIGHTS_2),
        3 => (&NODES_3, &WEIGHTS_3),
        4 => (&NODES_4, &WEIGHTS_4),
        5 => (&NODES_5, &WEIGHTS_5),
        6 => (&NODES_6, &WEIGHTS_6),
        7 => (&NODES_7, &WEIGHTS_7),
        8 => (&NODES_8, &WEIGHTS_8),
        9 => (&NODES_9, &WEIGHTS_9),
        10 => (&NODES_10, &WEIGHTS_10),
        11 => (&NODES_11, &WEIGHTS_11),
        12 => (&NODES_12, &WEIGHTS_12),
        13 => (&NODES_13, &WEIGHTS_13),
        14 => (&NODES_14, &WEIGHTS_14),
        15 => (&NODES_15, &WEIGHTS_15),
        16 => (&NODES_16, &WEIGHTS_16),
        _ => return None,
    };
    Some(rule)
}
