#pragma once

namespace outersq {

// Upper bounds on (clique number, degeneracy, chromatic number) of the square of
// an outerplanar graph with the given max degree, split by chordality. All cells
// are tight. Max degree 0 and 1 fall outside the table and get (D+1, D, D+1).
struct BoundTriple {
    int omega = 0;
    int ind = 0;
    int chi = 0;
};

inline BoundTriple table1_bounds(int delta, bool chordal) {
    const int d = delta;
    if (d <= 1) return {d + 1, d, d + 1};
    if (chordal) {
        switch (d) {
            case 2:
            case 3: return {d + 1, d, d + 1};
            case 4: return {d + 2, d + 1, d + 2};
            case 5:
            case 6: return {d + 1, d + 1, d + 1};
            default: return {d + 1, d, d + 1};
        }
    }
    switch (d) {
        case 2: return {d + 3, d + 2, d + 3};
        case 3: return {d + 2, d + 1, d + 2};
        case 4: return {d + 2, d + 2, d + 2};
        case 5: return {d + 1, d + 1, d + 2};
        case 6: return {d + 1, d + 1, d + 1};
        default: return {d + 1, d, d + 1};
    }
}

}  // namespace outersq
