#include "clustermono/harness.hpp"

namespace cmono {

// Rows kept in reference order; entry order within a row is as printed.
const std::vector<std::vector<std::string>>& table_rows(A3Case c) {
    static const std::vector<std::vector<std::string>> inward = {
        {"x1", "x2", "x3"},
        {"(x1*x3+x2+1)/(x1*x2)", "(x1*x3+1)/x2", "(x1*x3+x2+1)/(x2*x3)"},
        {"(x2+1)/x3", "(x1*x3+(x2+1)^2)/(x1*x2*x3)", "(x2+1)/x1"},
        {"x1", "(x1*x3+1)/x2", "x3"},
        {"(x1*x3+x2+1)/(x1*x2)", "(x1*x3+(x2+1)^2)/(x1*x2*x3)", "(x1*x3+x2+1)/(x2*x3)"},
        {"(x2+1)/x3", "x2", "(x2+1)/x1"},
        {"x3", "(x1*x3+1)/x2", "(x1*x3+x2+1)/(x1*x2)"},
        {"(x1*x3+x2+1)/(x2*x3)", "(x1*x3+(x2+1)^2)/(x1*x2*x3)", "(x2+1)/x3"},
        {"(x2+1)/x1", "x2", "x3"},
        {"x1", "(x1*x3+1)/x2", "(x1*x3+x2+1)/(x2*x3)"},
        {"(x1*x3+x2+1)/(x1*x2)", "(x1*x3+(x2+1)^2)/(x1*x2*x3)", "(x2+1)/x1"},
        {"(x2+1)/x3", "x2", "x1"},
        {"(x2+1)/x1", "(x1*x3+x2+1)/(x1*x2)", "x3"},
        {"(x2+1)/x3", "(x1*x3+x2+1)/(x2*x3)", "x1"},
    };
    static const std::vector<std::vector<std::string>> straightforward = {
        {"x1", "x2", "x3"},
        {"(1+x2)/x1", "x2", "x3"},
        {"x1", "(x1+x3)/x2", "x3"},
        {"x1", "x2", "(1+x2)/x3"},
        {"(1+x2)/x1", "(x1+x3+x2*x3)/(x1*x2)", "x3"},
        {"(1+x2)/x1", "x2", "(1+x2)/x3"},
        {"(x1+x3+x2*x3)/(x1*x2)", "(x1+x3)/x2", "x3"},
        {"x1", "(x1+x3)/x2", "(x1+x3+x1*x2)/(x2*x3)"},
        {"x1", "(x1+x3+x1*x2)/(x2*x3)", "(1+x2)/x3"},
        {"(1+x2)/x1", "(x1+x3+x2*x3)/(x1*x2)", "(1+x2)*(x1+x3)/(x1*x2*x3)"},
        {"(1+x2)/x1", "(1+x2)*(x1+x3)/(x1*x2*x3)", "(1+x2)/x3"},
        {"(x1+x3+x2*x3)/(x1*x2)", "(x1+x3)/x2", "(1+x2)*(x1+x3)/(x1*x2*x3)"},
        {"(1+x2)*(x1+x3)/(x1*x2*x3)", "(x1+x3)/x2", "(x1+x3+x1*x2)/(x2*x3)"},
        {"(1+x2)*(x1+x3)/(x1*x2*x3)", "(x1+x3+x1*x2)/(x2*x3)", "(1+x2)/x3"},
    };
    static const std::vector<std::vector<std::string>> cyclic = {
        {"x1", "x2", "x3"},
        {"(x2+x3)/x1", "x2", "x3"},
        {"x1", "(x1+x3)/x2", "x3"},
        {"x1", "x2", "(x1+x2)/x3"},
        {"(x2+x3)/x1", "(x1+x2+x3)/(x1*x2)", "x3"},
        {"(x1+x3)/x2", "(x1+x2+x3)/(x1*x2)", "x3"},
        {"(x1+x3)/x2", "(x1+x2+x3)/(x1*x2)", "(x1+x2+x3)/(x2*x3)"},
        {"(x1+x3)/x2", "x1", "(x1+x2+x3)/(x2*x3)"},
        {"(x1+x2)/x3", "x1", "(x1+x2+x3)/(x2*x3)"},
        {"(x1+x2)/x3", "(x1+x2+x3)/(x1*x3)", "(x1+x2+x3)/(x2*x3)"},
        {"(x1+x2)/x3", "(x1+x2+x3)/(x1*x3)", "x2"},
        {"(x2+x3)/x1", "(x1+x2+x3)/(x1*x3)", "x2"},
        {"(x2+x3)/x1", "(x1+x2+x3)/(x1*x3)", "(x1+x2+x3)/(x1*x2)"},
        {"(x1+x2+x3)/(x1*x2)", "(x1+x2+x3)/(x1*x3)", "(x1+x2+x3)/(x2*x3)"},
    };
    switch (c) {
        case A3Case::inward: return inward;
        case A3Case::straightforward: return straightforward;
        case A3Case::cyclic: return cyclic;
    }
    return inward;
}

}  // namespace cmono
