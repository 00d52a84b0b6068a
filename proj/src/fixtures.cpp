#include "latcode/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace latcode {

namespace {

Code make(RingSpec ring, std::size_t m, std::vector<Word> gens) {
    return Code{ring, m, std::move(gens)};
}

// Extended binary Golay [24,12]: [I | B] with the bordered quadratic-residue
// matrix mod 11 (QR = {1,3,4,5,9}).
Code golay24() {
    std::vector<Word> gens;
    for (int r = 0; r < 12; ++r) {
        Word w(24, 0);
        w[r] = 1;
        for (int c = 0; c < 12; ++c) {
            int v;
            if (r < 11 && c < 11) {
                int d = (r - c) % 11;
                if (d < 0) d += 11;
                v = (d == 0 || d == 1 || d == 3 || d == 4 || d == 5 || d == 9) ? 1 : 0;
            } else {
                v = (r == 11 && c == 11) ? 0 : 1;
            }
            w[12 + c] = v;
        }
        gens.push_back(std::move(w));
    }
    return make(RingSpec::zmod(2), 24, std::move(gens));
}

// Extended Hamming [8,4] = RM(1,3).
Code hamming8() {
    return make(RingSpec::zmod(2), 8,
                {{1, 1, 1, 1, 1, 1, 1, 1},
                 {0, 1, 0, 1, 0, 1, 0, 1},
                 {0, 0, 1, 1, 0, 0, 1, 1},
                 {0, 0, 0, 0, 1, 1, 1, 1}});
}

Code three_e8() {
    Code e8 = hamming8();
    std::vector<Word> gens;
    for (int blk = 0; blk < 3; ++blk)
        for (const auto& g : e8.generators) {
            Word w(24, 0);
            std::copy(g.begin(), g.end(), w.begin() + 8 * blk);
            gens.push_back(std::move(w));
        }
    return make(RingSpec::zmod(2), 24, std::move(gens));
}

// Extended ternary Golay [12,6].
Code golay12_ternary() {
    static const int B[6][6] = {
        {0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
        {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0},
    };
    std::vector<Word> gens;
    for (int r = 0; r < 6; ++r) {
        Word w(12, 0);
        w[r] = 1;
        for (int c = 0; c < 6; ++c) w[6 + c] = B[r][c];
        gens.push_back(std::move(w));
    }
    return make(RingSpec::zmod(3), 12, std::move(gens));
}

// Tetracode [4,2] over Z/3.
Code tetracode() {
    return make(RingSpec::zmod(3), 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
}

// Octacode: extended cyclic lift of the [7,4] Hamming code to Z/4
// (generator polynomial x^3 + 2x^2 + x + 3, parity column = -row sum).
Code octacode() {
    static const int g[4] = {3, 1, 2, 1};
    std::vector<Word> gens;
    for (int s = 0; s < 4; ++s) {
        Word w(8, 0);
        int sum = 0;
        for (int i = 0; i < 4; ++i) {
            w[s + i] = g[i];
            sum += g[i];
        }
        w[7] = (4 - sum % 4) % 4;
        gens.push_back(std::move(w));
    }
    return make(RingSpec::zmod(4), 8, std::move(gens));
}

// Hexacode [6,3] over F4, Hermitian self-dual: [I | A], A = circulant(1,w,w).
Code hexacode() {
    const Elem w = 2;  // omega
    return make(RingSpec::f4(), 6,
                {{1, 0, 0, 1, w, w}, {0, 1, 0, w, 1, w}, {0, 0, 1, w, w, 1}});
}

// Three copies of the length-2 Hermitian self-dual F4 code span{(1,1)}.
Code three_c2_f4() {
    return make(RingSpec::f4(), 6, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
}

Code c2_f4() { return make(RingSpec::f4(), 2, {{1, 1}}); }
Code k2_f2u() { return make(RingSpec::f2u(), 2, {{1, 1}}); }

Code z25_gen5() { return make(RingSpec::zmod(25), 1, {{5}}); }

Code rep2() { return make(RingSpec::zmod(2), 2, {{1, 1}}); }
Code d5_two() { return make(RingSpec::zmod(4), 1, {{2}}); }

// binary components of the CRT rows (table "Generator matrix")
Code binary(std::size_t m, std::vector<Word> gens) {
    return make(RingSpec::zmod(2), m, std::move(gens));
}
Code c6_1() { return binary(6, {{1, 1, 1, 1, 1, 1}}); }
Code c6_2() { return binary(6, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1}}); }
Code c6_3() { return binary(6, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}); }
Code c6_4() { return binary(6, {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1}}); }
Code c3_1() { return binary(3, {{0, 0, 0}}); }
Code c3_2() { return binary(3, {{1, 1, 0}}); }
Code c3_3() { return binary(3, {{1, 1, 1}}); }
Code c2_bin() { return binary(2, {{1, 1}}); }
Code c1_bin() { return binary(1, {{0}}); }

const std::map<std::string, Code (*)()>& registry() {
    static const std::map<std::string, Code (*)()> reg = {
        {"golay24", &golay24},       {"hamming8", &hamming8},
        {"3e8", &three_e8},          {"golay12", &golay12_ternary},
        {"tetracode", &tetracode},   {"octacode", &octacode},
        {"hexacode", &hexacode},     {"3c2_f4", &three_c2_f4},
        {"c2_f4", &c2_f4},           {"k2_f2u", &k2_f2u},
        {"z25_gen5", &z25_gen5},     {"rep2", &rep2},
        {"d5_two", &d5_two},         {"c6_1", &c6_1},
        {"c6_2", &c6_2},             {"c6_3", &c6_3},
        {"c6_4", &c6_4},             {"c3_1", &c3_1},
        {"c3_2", &c3_2},             {"c3_3", &c3_3},
        {"c2_bin", &c2_bin},         {"c1_bin", &c1_bin},
    };
    return reg;
}

}  // namespace

Code fixture_code(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown fixture code: " + name);
    return it->second();
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

Code table_row_code(const TableRow& row) {
    if (!row.fixture) throw std::invalid_argument("table row has no fixture: " + row.code_name);
    const std::string& f = *row.fixture;
    if (f.rfind("crt:", 0) == 0) {
        Code c1 = fixture_code(f.substr(4));
        return crt_combine(c1, dual_code(c1));
    }
    return fixture_code(f);
}

const std::vector<TableRow>& table_rows() {
    using RS = RootLatticeSpec;
    static const std::vector<TableRow> rows = {
        // A1 / Z2 (Pless-Sloane classification; only re-derivable codes built)
        {"A1/Z2", "A24", RS::A(1), std::nullopt, "2D12", "matrix not printed (Pless-Sloane 1975)"},
        {"A1/Z2", "B24", RS::A(1), std::nullopt, "D10+2E7", "matrix not printed (Pless-Sloane 1975)"},
        {"A1/Z2", "C24", RS::A(1), std::nullopt, "3D8", "matrix not printed (Pless-Sloane 1975)"},
        {"A1/Z2", "D24", RS::A(1), std::nullopt, "4D6", "matrix not printed (Pless-Sloane 1975)"},
        {"A1/Z2", "E24", RS::A(1), std::nullopt, "D24", "matrix not printed (Pless-Sloane 1975)"},
        {"A1/Z2", "F24", RS::A(1), std::nullopt, "6D4", "matrix not printed (Pless-Sloane 1975)"},
        {"A1/Z2", "G24", RS::A(1), "golay24", "24A1", "standard extended Golay matrix"},
        {"A1/Z2", "3E8", RS::A(1), "3e8", "3E8", "three copies of the extended Hamming code"},
        {"A1/Z2", "E8+E16", RS::A(1), std::nullopt, "D16+E8", "matrix not printed (Pless-Sloane 1975)"},
        // A2 / Z3
        {"A2/Z3", "G12", RS::A(2), "golay12", "12A2", "standard extended ternary Golay matrix"},
        {"A2/Z3", "4C3(12)", RS::A(2), std::nullopt, "4E6", "matrix not printed"},
        {"A2/Z3", "3E4", RS::A(2), std::nullopt, "3E8", "matrix not printed"},
        // A3 / Z4
        {"A3/Z4", "O8", RS::A(3), "octacode", "8A3", "standard octacode matrix"},
        {"A3/Z4", "Q8", RS::A(3), std::nullopt, "4D6", "matrix not printed (Conway-Sloane 1993)"},
        {"A3/Z4", "K8", RS::A(3), std::nullopt, "D24", "matrix not printed (Conway-Sloane 1993)"},
        {"A3/Z4", "K8'", RS::A(3), std::nullopt, "2D12", "matrix not printed (Conway-Sloane 1993)"},
        // A24 / Z25
        {"A24/Z25", "<5>", RS::A(24), "z25_gen5", "A24", "<5> = 5 Z/25Z"},
        // E6 / Z3
        {"E6/Z3", "E4", RS::E(6), "tetracode", "4E6", "tetracode, the unique self-dual [4,2]"},
        // D4 / F2xF2 (generator matrices printed)
        {"D4/F2xF2", "CRT(C6_1,C6_1-dual)", RS::D(4, RingKind::F2xF2), "crt:c6_1", "D24", "printed matrix"},
        {"D4/F2xF2", "CRT(C6_2,C6_2-dual)", RS::D(4, RingKind::F2xF2), "crt:c6_2", "D16+E8", "printed matrix"},
        {"D4/F2xF2", "CRT(C6_3,C6_3-dual)", RS::D(4, RingKind::F2xF2), "crt:c6_3", "3E8", "printed matrix"},
        {"D4/F2xF2", "CRT(C6_4,C6_4-dual)", RS::D(4, RingKind::F2xF2), "crt:c6_4", "2D12", "printed matrix"},
        // D8 / F2xF2
        {"D8/F2xF2", "CRT(C3_1,C3_1-dual)", RS::D(8, RingKind::F2xF2), "crt:c3_1", "3E8", "printed matrix"},
        {"D8/F2xF2", "CRT(C3_2,C3_2-dual)", RS::D(8, RingKind::F2xF2), "crt:c3_2", "D16+E8", "printed matrix"},
        // published label D24 is inconsistent with the printed C3_3 = (1 1 1):
        // both CRT orders give 3D8 (see the D8 glue-class analysis in the tests)
        {"D8/F2xF2", "CRT(C3_3,C3_3-dual)", RS::D(8, RingKind::F2xF2), "crt:c3_3", "D24", "printed matrix"},
        // D12, D24 / F2xF2
        {"D12/F2xF2", "CRT(C2,C2-dual)", RS::D(12, RingKind::F2xF2), "crt:c2_bin", "D24", "printed matrix"},
        {"D24/F2xF2", "CRT(C1,C1-dual)", RS::D(24, RingKind::F2xF2), "crt:c1_bin", "D24", "printed matrix"},
        // D4 / F4
        {"D4/F4", "E6(hexacode)", RS::D(4, RingKind::F4), "hexacode", "6D4", "standard hexacode matrix"},
        {"D4/F4", "3C2", RS::D(4, RingKind::F4), "3c2_f4", "3E8", "three copies of span{(1,1)}"},
        // D6 / F4
        {"D6/F4", "C4", RS::D(6, RingKind::F4), std::nullopt, "4D6", "matrix not printed (Gaborit et al. 2002)"},
        // D12 / F4
        {"D12/F4", "C2", RS::D(12, RingKind::F4), "c2_f4", "D24", "span{(1,1)}"},
        // D4..D12 / F2u (Dougherty et al. classification labels)
        {"D4/F2u", "K6", RS::D(4, RingKind::F2U), std::nullopt, "D24", "matrix not printed (Dougherty et al. 1999)"},
        {"D4/F2u", "[6,2]_d4d2a", RS::D(4, RingKind::F2U), std::nullopt, "D16+E8", "matrix not printed"},
        {"D4/F2u", "[6,3]_3d2a", RS::D(4, RingKind::F2U), std::nullopt, "3E8", "matrix not printed"},
        {"D4/F2u", "[6,3]_3d2d", RS::D(4, RingKind::F2U), std::nullopt, "3D8", "matrix not printed"},
        {"D6/F2u", "[4,1]_d4(K4)", RS::D(6, RingKind::F2U), std::nullopt, "D24", "matrix not printed"},
        {"D6/F2u", "[4,2]_2d2(D4)", RS::D(6, RingKind::F2U), std::nullopt, "2D12", "matrix not printed"},
        {"D12/F2u", "K2", RS::D(12, RingKind::F2U), "k2_f2u", "D24", "span{(1,1)}"},
    };
    return rows;
}

}  // namespace latcode
