#include "biqlat/targets.hpp"

namespace biqlat {

namespace {

GramMatrix make_d4() {
    return from_int_rows({{2, 0, -1, 0},
                          {0, 2, -1, 0},
                          {-1, -1, 2, -1},
                          {0, 0, -1, 2}});
}

GramMatrix make_d4d4() {
    const GramMatrix d4 = make_d4();
    return block_diag(d4, d4);
}

GramMatrix make_d8() {
    return from_int_rows({{2, 0, -1, 0, 0, 0, 0, 0},
                          {0, 2, -1, 0, 0, 0, 0, 0},
                          {-1, -1, 2, -1, 0, 0, 0, 0},
                          {0, 0, -1, 2, -1, 0, 0, 0},
                          {0, 0, 0, -1, 2, -1, 0, 0},
                          {0, 0, 0, 0, -1, 2, -1, 0},
                          {0, 0, 0, 0, 0, -1, 2, -1},
                          {0, 0, 0, 0, 0, 0, -1, 2}});
}

GramMatrix make_e8() {
    return from_int_rows({{4, -2, 0, 0, 0, 0, 0, 1},
                          {-2, 2, -1, 0, 0, 0, 0, 0},
                          {0, -1, 2, -1, 0, 0, 0, 0},
                          {0, 0, -1, 2, -1, 0, 0, 0},
                          {0, 0, 0, -1, 2, -1, 0, 0},
                          {0, 0, 0, 0, -1, 2, -1, 0},
                          {0, 0, 0, 0, 0, -1, 2, 0},
                          {1, 0, 0, 0, 0, 0, 0, 2}});
}

}  // namespace

const GramMatrix& target_gram(TargetLattice t) {
    static const GramMatrix d4 = make_d4();
    static const GramMatrix d4d4 = make_d4d4();
    static const GramMatrix d8 = make_d8();
    static const GramMatrix e8 = make_e8();
    switch (t) {
        case TargetLattice::D4: return d4;
        case TargetLattice::D4D4: return d4d4;
        case TargetLattice::D8: return d8;
        case TargetLattice::E8: return e8;
    }
    return d4;
}

Int target_det(TargetLattice t) {
    switch (t) {
        case TargetLattice::D4: return 4;
        case TargetLattice::D4D4: return 16;
        case TargetLattice::D8: return 4;
        case TargetLattice::E8: return 1;
    }
    return 0;
}

std::size_t target_kissing(TargetLattice t) {
    switch (t) {
        case TargetLattice::D4: return 24;
        case TargetLattice::D4D4: return 48;
        case TargetLattice::D8: return 112;
        case TargetLattice::E8: return 240;
    }
    return 0;
}

int target_dim(TargetLattice t) {
    return (t == TargetLattice::D4) ? 4 : 8;
}

std::string_view target_name(TargetLattice t) {
    switch (t) {
        case TargetLattice::D4: return "D4";
        case TargetLattice::D4D4: return "D4+D4";
        case TargetLattice::D8: return "D8";
        case TargetLattice::E8: return "E8";
    }
    return "?";
}

std::optional<TargetLattice> parse_target(std::string_view s) {
    if (s == "d4") return TargetLattice::D4;
    if (s == "d4d4") return TargetLattice::D4D4;
    if (s == "d8") return TargetLattice::D8;
    if (s == "e8") return TargetLattice::E8;
    return std::nullopt;
}

}  // namespace biqlat
