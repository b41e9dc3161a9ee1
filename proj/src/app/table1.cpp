#include "magnetic/app/table1.hpp"

namespace magnetic::app {

namespace {

Integer z(const char* s) { return Integer(s); }
Integer p(long b, unsigned long e) { return ipow(Integer(b), e); }

LiftTableRow row(int id, Rational scale, long m, std::vector<Rational> hecke, std::vector<Integer> num,
                 std::vector<Integer> den, bool extended, std::string label) {
    LiftTableRow r;
    r.id = id;
    r.scale = scale;
    r.m = m;
    r.hecke = std::move(hecke);
    r.expected = forms::JQuotient{1, std::move(num), std::move(den), 2};
    r.extended = extended;
    r.label = std::move(label);
    return r;
}

std::vector<LiftTableRow> build() {
    const std::vector<Rational> one{1};
    std::vector<LiftTableRow> rows;
    // E4 (19j - 8*15^3) / (j + 15^3)^2
    rows.push_back(row(1, frac(1, 27), 7, one, {-8 * p(15, 3), 19}, {p(15, 3), 1}, false, "3^-3 f7"));
    // E4 (101j - 3*20^3) / (j - 20^3)^2
    rows.push_back(row(2, frac(-1, 8), 8, one, {-3 * p(20, 3), 101}, {-p(20, 3), 1}, false, "-2^-3 f8"));
    // E4 (43j - 6*32^3) / (j + 32^3)^2
    rows.push_back(row(3, frac(1, 64), 11, one, {-6 * p(32, 3), 43}, {p(32, 3), 1}, false, "2^-6 f11"));
    // E4 (14j + 18*15^3) / (j - 2*30^3)^2
    rows.push_back(row(4, frac(1, 2304), 3, {0, 1}, {18 * p(15, 3), 14}, {-2 * p(30, 3), 1}, false, "48^-2 f3|T4"));
    // E4 (611j + 404*33^3) / (j - 66^3)^2
    rows.push_back(row(5, frac(1, 108), 4, {1, frac(-1, 2)}, {404 * p(33, 3), 611}, {-p(66, 3), 1}, false,
                       "108^-1 f4|(1-T4/2)"));
    // E4 (82451j + 5272*255^3) / (j - 255^3)^2
    rows.push_back(row(6, frac(1, 27), 7, {2, frac(-1, 2)}, {5272 * p(255, 3), 82451}, {-p(255, 3), 1}, false,
                       "3^-3 f7|(2-T4/2)"));
    // E4 (25j - 2*96^3) / (j + 96^3)^2
    rows.push_back(row(7, frac(1, 1728), 19, one, {-2 * p(96, 3), 25}, {p(96, 3), 1}, false, "12^-3 f19"));
    // E4 (11329j - 578*960^3) / (j + 960^3)^2
    rows.push_back(row(8, frac(1, 1728), 43, one, {-578 * p(960, 3), 11329}, {p(960, 3), 1}, true, "12^-3 f43"));
    // E4 (1221961j - 49442*5280^3) / (j + 5280^3)^2
    rows.push_back(
        row(9, frac(1, 1728), 67, one, {-49442 * p(5280, 3), 1221961}, {p(5280, 3), 1}, true, "12^-3 f67"));
    // E4 (908855380249j - 23238932978*640320^3) / (j + 640320^3)^2
    rows.push_back(row(10, frac(1, 1728), 163, one, {-z("23238932978") * p(640320, 3), z("908855380249")},
                       {p(640320, 3), 1}, true, "12^-3 f163"));
    // E4 (785j^3 - 15219684j^2 + 28709816985j + 837864*495^3) / (j^2 + 191025j - 495^3)^2
    rows.push_back(row(11, frac(1, 15), 15, one, {837864 * p(495, 3), z("28709816985"), -15219684, 785},
                       {-p(495, 3), 191025, 1}, false, "15^-1 f15"));
    // E4 (733j^3 + 72767680j^2 - 984198615040j + 123*20^3*880^3) / (j^2 - 158*20^3 j - 880^3)^2
    rows.push_back(row(12, frac(-1, 80), 20, one,
                       {123 * p(20, 3) * p(880, 3), z("-984198615040"), 72767680, 733},
                       {-p(880, 3), -158 * p(20, 3), 1}, false, "-80^-1 f20"));
    // E4 P23(j) / (j^3 + 27934*5^3 j^2 - 329683*5^6 j + 187^3*5^9)^2
    // P23 = 141826j^5 - 286458244*5^3 j^4 + 5214621227*5^6 j^3 + 3414887843776*5^9 j^2
    //       - 47816219216827*5^12 j + 4378632*187^3*5^15
    rows.push_back(row(13, frac(-1, 1), 23, one,
                       {4378632 * p(187, 3) * p(5, 15), -z("47816219216827") * p(5, 12),
                        z("3414887843776") * p(5, 9), z("5214621227") * p(5, 6), -z("286458244") * p(5, 3),
                        141826},
                       {p(187, 3) * p(5, 9), -329683 * p(5, 6), 27934 * p(5, 3), 1}, false, "-f23"));
    return rows;
}

}  // namespace

const std::vector<LiftTableRow>& table1_rows() {
    static const std::vector<LiftTableRow> rows = build();
    return rows;
}

}  // namespace magnetic::app
