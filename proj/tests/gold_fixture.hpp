#pragma once
// A 10-annotation corpus covering every gold-builder rule: multi-word FEE
// drop (s4), multi-word filler drop leaving too few roles (s7), a third role
// that loses the co-occurrence selection (s2's Place), several fillers per
// role expanding into all combinations (s3, s6), duplicate merging (s5+s8),
// and a co-occurrence tie resolved lexicographically (Theft).
//
// Expected output enumerated by hand:
//   Abandonment selects (Agent, Theme): co-occurrence 3 vs 1 for the pairs
//     with Place; s1 -> (man, leave, dog); s2 -> (woman, abandon, car);
//     s3 -> (boy|girl, leave, toy); s4 dropped (FEE "walk away").
//   Kidnapping selects (Predator, Victim): s5/s8 merge into
//     (Freddy, kidnap, kid) weight 2; s6 expands Victim {farmer, cow};
//     s7 dropped ("little girl" filler leaves one role).
//   Theft ties (Goods, Perpetrator) vs (Perpetrator, Source) at 1 and picks
//     the lexicographically smaller pair, so only s9 emits, with the Goods
//     filler in the subject slot: (ring, steal, thief).

namespace fixtures {

inline const char* kGoldAnnotations =
    "s1\tAbandonment\tleave\tAgent\tman\n"
    "s1\tAbandonment\tleave\tTheme\tdog\n"
    "s2\tAbandonment\tabandon\tAgent\twoman\n"
    "s2\tAbandonment\tabandon\tTheme\tcar\n"
    "s2\tAbandonment\tabandon\tPlace\tlot\n"
    "s3\tAbandonment\tleave\tAgent\tboy\n"
    "s3\tAbandonment\tleave\tAgent\tgirl\n"
    "s3\tAbandonment\tleave\tTheme\ttoy\n"
    "s4\tAbandonment\twalk away\tAgent\tman\n"
    "s4\tAbandonment\twalk away\tTheme\tfamily\n"
    "s5\tKidnapping\tkidnap\tPredator\tFreddy\n"
    "s5\tKidnapping\tkidnap\tVictim\tkid\n"
    "s6\tKidnapping\tabduct\tPredator\talien\n"
    "s6\tKidnapping\tabduct\tVictim\tfarmer\n"
    "s6\tKidnapping\tabduct\tVictim\tcow\n"
    "s7\tKidnapping\tsnatch\tPredator\tthief\n"
    "s7\tKidnapping\tsnatch\tVictim\tlittle girl\n"
    "s8\tKidnapping\tkidnap\tPredator\tFreddy\n"
    "s8\tKidnapping\tkidnap\tVictim\tkid\n"
    "s9\tTheft\tsteal\tPerpetrator\tthief\n"
    "s9\tTheft\tsteal\tGoods\tring\n"
    "s10\tTheft\trob\tPerpetrator\tgang\n"
    "s10\tTheft\trob\tSource\tbank\n";

inline const char* kGoldExpected =
    "# frame\tsubject\trole1\tverb\tobject\trole2\tweight\n"
    "# role1 and role2 are the frame's selected roles in lexicographic order\n"
    "Abandonment\tboy\tAgent\tleave\ttoy\tTheme\t1\n"
    "Abandonment\tgirl\tAgent\tleave\ttoy\tTheme\t1\n"
    "Abandonment\tman\tAgent\tleave\tdog\tTheme\t1\n"
    "Abandonment\twoman\tAgent\tabandon\tcar\tTheme\t1\n"
    "Kidnapping\tFreddy\tPredator\tkidnap\tkid\tVictim\t2\n"
    "Kidnapping\talien\tPredator\tabduct\tcow\tVictim\t1\n"
    "Kidnapping\talien\tPredator\tabduct\tfarmer\tVictim\t1\n"
    "Theft\tring\tGoods\tsteal\tthief\tPerpetrator\t1\n";

}  // namespace fixtures
