#include "topsnut/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "topsnut/error.hpp"

namespace topsnut {
namespace {

int edge_label(const Labelling& L, int ei) {
    auto it = L.edge.find(ei);
    if (it == L.edge.end()) fail("MissingLabel", "edge " + std::to_string(ei));
    return it->second;
}

std::vector<int> default_edge_order(const Graph& g, const Labelling& L) {
    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return edge_label(L, a) < edge_label(L, b);
    });
    return order;
}

void check_order(const Graph& g, const std::vector<int>& order,
                 const std::vector<char>& flip) {
    const int q = g.edge_count();
    if ((int)order.size() != q || (int)flip.size() != q)
        fail("SizeMismatch", "edge order and flips must cover every edge");
    std::vector<char> seen(q, 0);
    for (int ei : order) {
        if (ei < 0 || ei >= q || seen[ei]) fail("SizeMismatch", "bad edge order");
        seen[ei] = 1;
    }
}

}  // namespace

TopsnutMatrix matrix_from_graph(const Graph& g, const Labelling& L) {
    return matrix_from_graph(g, L, default_edge_order(g, L),
                             std::vector<char>(g.edge_count(), 0));
}

TopsnutMatrix matrix_from_graph(const Graph& g, const Labelling& L,
                                const std::vector<int>& edge_order,
                                const std::vector<char>& flip) {
    check_order(g, edge_order, flip);
    TopsnutMatrix A;
    for (int col = 0; col < (int)edge_order.size(); ++col) {
        const int ei = edge_order[col];
        const Edge& e = g.edge(ei);
        auto iu = L.vertex.find(e.u);
        auto iv = L.vertex.find(e.v);
        if (iu == L.vertex.end() || iv == L.vertex.end())
            fail("MissingLabel", "endpoint of edge " + std::to_string(ei));
        int a = iu->second, b = iv->second;
        if (a > b) std::swap(a, b);
        if (flip[ei]) std::swap(a, b);
        A.X.push_back({a});
        A.W.push_back({edge_label(L, ei)});
        A.Y.push_back({b});
    }
    return A;
}

TopsnutMatrix matrix_from_sets(const Graph& g, const SetLabelling& SL) {
    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto ia = SL.representatives.find(a);
        auto ib = SL.representatives.find(b);
        int va = ia == SL.representatives.end() ? 0 : ia->second;
        int vb = ib == SL.representatives.end() ? 0 : ib->second;
        return va < vb;
    });
    return matrix_from_sets(g, SL, order, std::vector<char>(g.edge_count(), 0));
}

TopsnutMatrix matrix_from_sets(const Graph& g, const SetLabelling& SL,
                               const std::vector<int>& edge_order,
                               const std::vector<char>& flip) {
    check_order(g, edge_order, flip);
    TopsnutMatrix A;
    for (int ei : edge_order) {
        const Edge& e = g.edge(ei);
        auto iu = SL.vertex_sets.find(e.u);
        auto iv = SL.vertex_sets.find(e.v);
        if (iu == SL.vertex_sets.end() || iv == SL.vertex_sets.end())
            fail("MissingLabel", "endpoint set of edge " + std::to_string(ei));
        auto ir = SL.representatives.find(ei);
        if (ir == SL.representatives.end())
            fail("MissingLabel", "representative of edge " + std::to_string(ei));
        Cell a = iu->second, b = iv->second;
        if (flip[ei]) std::swap(a, b);
        A.X.push_back(std::move(a));
        A.W.push_back({ir->second});
        A.Y.push_back(std::move(b));
    }
    return A;
}

TopsnutMatrix reciprocal(const TopsnutMatrix& A) {
    TopsnutMatrix R = A;
    std::reverse(R.X.begin(), R.X.end());
    std::reverse(R.W.begin(), R.W.end());
    std::reverse(R.Y.begin(), R.Y.end());
    return R;
}

void column_exchange(TopsnutMatrix& A, int i, int j) {
    if (i < 0 || j < 0 || i >= A.cols() || j >= A.cols())
        fail("SizeMismatch", "column index out of range");
    std::swap(A.X[i], A.X[j]);
    std::swap(A.W[i], A.W[j]);
    std::swap(A.Y[i], A.Y[j]);
}

void xy_exchange(TopsnutMatrix& A, int i) {
    if (i < 0 || i >= A.cols()) fail("SizeMismatch", "column index out of range");
    std::swap(A.X[i], A.Y[i]);
}

TopsnutMatrix compose(const TopsnutMatrix& a, const TopsnutMatrix& b) {
    TopsnutMatrix C = a;
    C.X.insert(C.X.end(), b.X.begin(), b.X.end());
    C.W.insert(C.W.end(), b.W.begin(), b.W.end());
    C.Y.insert(C.Y.end(), b.Y.begin(), b.Y.end());
    return C;
}

TopsnutMatrix decompose(const TopsnutMatrix& whole, const TopsnutMatrix& part) {
    std::vector<char> used(whole.cols(), 0);
    for (int j = 0; j < part.cols(); ++j) {
        bool found = false;
        for (int i = 0; i < whole.cols() && !found; ++i) {
            if (used[i]) continue;
            if (whole.X[i] == part.X[j] && whole.W[i] == part.W[j] &&
                whole.Y[i] == part.Y[j]) {
                used[i] = 1;
                found = true;
            }
        }
        if (!found) fail("DecompositionMismatch", "column " + std::to_string(j) +
                                                      " of the part is absent");
    }
    TopsnutMatrix R;
    for (int i = 0; i < whole.cols(); ++i) {
        if (used[i]) continue;
        R.X.push_back(whole.X[i]);
        R.W.push_back(whole.W[i]);
        R.Y.push_back(whole.Y[i]);
    }
    return R;
}

std::vector<std::pair<int, int>> route_cells(const std::string& route, int q) {
    std::vector<std::pair<int, int>> cells;
    auto X = [&](int c) { cells.push_back({0, c - 1}); };
    auto W = [&](int c) { cells.push_back({1, c - 1}); };
    auto Y = [&](int c) { cells.push_back({2, c - 1}); };
    if (route == "rows") {
        // Right along X, back along W, right again along Y.
        for (int c = 1; c <= q; ++c) X(c);
        for (int c = q; c >= 1; --c) W(c);
        for (int c = 1; c <= q; ++c) Y(c);
    } else if (route == "cols") {
        for (int c = 1; c <= q; ++c) {
            if (c % 2) { X(c); W(c); Y(c); }
            else       { Y(c); W(c); X(c); }
        }
    } else if (route == "zigzag") {
        if (q < 2 || q % 2) fail("BadRoute", "zigzag needs an even column count");
        Y(2); Y(1); W(1); X(1);
        int i = 1;
        while (i + 2 <= q) {
            W(i + 1); Y(i + 2);   // down the diagonal
            Y(i + 3);
            W(i + 2); X(i + 1);   // back up
            X(i + 2);
            i += 2;
        }
        X(q); W(q);
    } else if (route.rfind("perm:", 0) == 0) {
        std::string body = route.substr(5);
        for (char& ch : body)
            if (ch == ',') ch = ' ';
        std::istringstream iss(body);
        std::vector<char> seen(3 * q, 0);
        long long idx;
        while (iss >> idx) {
            if (idx < 0 || idx >= 3 * q || seen[idx])
                fail("BadRoute", "perm index " + std::to_string(idx));
            seen[idx] = 1;
            cells.push_back({(int)(idx / q), (int)(idx % q)});
        }
        if ((int)cells.size() != 3 * q)
            fail("BadRoute", "perm must list every cell exactly once");
    } else {
        fail("BadRoute", route);
    }
    return cells;
}

std::string extract_tbpaw(const TopsnutMatrix& A, const std::string& route) {
    std::string base = route;
    const TopsnutMatrix* M = &A;
    TopsnutMatrix rec;
    if (base.size() > 4 && base.rfind("-rev") == base.size() - 4) {
        base = base.substr(0, base.size() - 4);
        rec = reciprocal(A);
        M = &rec;
    }
    std::string out;
    for (auto [row, col] : route_cells(base, M->cols())) {
        const Cell& cell = row == 0 ? M->X[col] : row == 1 ? M->W[col] : M->Y[col];
        for (int v : cell) out += std::to_string(v);
    }
    return out;
}

std::vector<TopsnutMatrix> all_matrices(const Graph& g, const Labelling& L) {
    const int q = g.edge_count();
    std::vector<int> order(q);
    for (int i = 0; i < q; ++i) order[i] = i;
    std::sort(order.begin(), order.end());
    std::vector<TopsnutMatrix> out;
    do {
        for (unsigned long long mask = 0; mask < (1ull << q); ++mask) {
            std::vector<char> flip(q, 0);
            for (int i = 0; i < q; ++i)
                if (mask & (1ull << i)) flip[i] = 1;
            out.push_back(matrix_from_graph(g, L, order, flip));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::vector<TopsnutMatrix> matrix_group(const TopsnutMatrix& A, int n) {
    if (n < 1) fail("DegenerateParameters", "group order must be positive");
    std::vector<TopsnutMatrix> out;
    for (int i = 1; i <= n; ++i) {
        TopsnutMatrix B = A;
        auto shift = [&](std::vector<Cell>& row) {
            for (Cell& cell : row) {
                for (int& v : cell) v = ((v + i - 1) % n + n) % n;
                std::sort(cell.begin(), cell.end());
            }
        };
        shift(B.X);
        shift(B.Y);
        out.push_back(std::move(B));
    }
    return out;
}

std::string tbpaw_group(const TopsnutMatrix& A, int n, const std::string& route) {
    std::string out;
    for (const auto& B : matrix_group(A, n)) out += extract_tbpaw(B, route);
    return out;
}

void write_matrix(std::ostream& os, const TopsnutMatrix& A) {
    auto row = [&](const std::vector<Cell>& r) {
        for (int i = 0; i < (int)r.size(); ++i) {
            if (i) os << ' ';
            for (int j = 0; j < (int)r[i].size(); ++j) {
                if (j) os << ',';
                os << r[i][j];
            }
        }
        os << '\n';
    };
    row(A.X);
    row(A.W);
    row(A.Y);
}

TopsnutMatrix read_matrix(std::istream& is) {
    TopsnutMatrix A;
    auto row = [&](std::vector<Cell>& r) {
        std::string line;
        if (!std::getline(is, line)) fail("BadMatrixFile", "expected three rows");
        std::istringstream iss(line);
        std::string tok;
        while (iss >> tok) {
            Cell cell;
            std::istringstream cs(tok);
            std::string piece;
            while (std::getline(cs, piece, ',')) {
                try {
                    cell.push_back(std::stoi(piece));
                } catch (...) {
                    fail("BadMatrixFile", "bad cell " + tok);
                }
            }
            if (cell.empty()) fail("BadMatrixFile", "empty cell");
            r.push_back(std::move(cell));
        }
    };
    row(A.X);
    row(A.W);
    row(A.Y);
    if (A.X.size() != A.W.size() || A.W.size() != A.Y.size())
        fail("BadMatrixFile", "rows differ in length");
    return A;
}

TopsnutMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", path);
    return read_matrix(in);
}

void save_matrix(const TopsnutMatrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("FileNotFound", path);
    write_matrix(out, A);
}

}  // namespace topsnut
