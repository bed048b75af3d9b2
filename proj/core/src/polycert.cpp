#include "vclab/polycert.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "vclab/binom.hpp"
#include "vclab/digest.hpp"

namespace vclab {

int default_gamma(int d) { return 4 * (d + 1); }

mpq_class eval_poly_f(const SubsetMask& F, const SubsetMask& B, const SubsetMask& point) {
    if (!B.subset_of(F)) throw std::invalid_argument("eval_poly_f: B must be a subset of F");
    if (F.ground_set() != point.ground_set())
        throw std::invalid_argument("eval_poly_f: ground set mismatch");
    mpq_class value = 0;
    if (B.subset_of(point) && !(F.minus(B)).intersects(point)) {
        int odd = (F.cardinality() - B.cardinality()) & 1;
        value += odd ? -1 : 1;
    }
    if (F.subset_of(point)) value -= 1;
    return value;
}

mpq_class eval_poly_y(const SubsetMask& Z, const SubsetMask& point) {
    if (Z.ground_set() != point.ground_set())
        throw std::invalid_argument("eval_poly_y: ground set mismatch");
    return Z.subset_of(point) ? mpq_class(-1) : mpq_class(0);
}

mpq_class eval_poly_h(const SubsetMask& H, const SubsetMask& point, int d) {
    if (H.ground_set() != point.ground_set())
        throw std::invalid_argument("eval_poly_h: ground set mismatch");
    if (!H.subset_of(point)) return 0;
    return mpq_class(point.cardinality() - d - 1);
}

YZConditionReport verify_yz_conditions(const WitnessedFamily& w, const YZSelection& yz) {
    YZConditionReport r;
    const auto& pairs = yz.pairs;
    // shape: Z_i in binom(Y_i, d), Y_i a (d+1)-set outside the family
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [Y, Z] = pairs[i];
        if (Y.cardinality() != w.d + 1 || Z.cardinality() != w.d || !Z.subset_of(Y)) {
            r.ok = false;
            r.violated_condition = 0;
            r.detail = "pair " + std::to_string(i) + " is not (Y,Z) with |Y|=d+1, Z in binom(Y,d)";
            return r;
        }
        if (w.family.contains(Y)) {
            r.ok = false;
            r.violated_condition = 0;
            r.detail = "Y_" + std::to_string(i) + " = " + Y.to_string() + " lies in the family";
            return r;
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < w.witnesses.size(); ++j)
            if (pairs[i].second == w.witnesses[j]) {
                r.ok = false;
                r.violated_condition = 1;
                r.detail = "Z_" + std::to_string(i) + " equals B_" + std::to_string(j);
                return r;
            }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if ((pairs[i].first & pairs[j].first).cardinality() > w.d - 1) {
                r.ok = false;
                r.violated_condition = 2;
                r.detail = "|Y_" + std::to_string(i) + " n Y_" + std::to_string(j) + "| >= d";
                return r;
            }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            for (std::size_t k = 0; k < w.family.size(); ++k) {
                const SubsetMask& F = w.family.members[k];
                if ((F & pairs[i].first) == pairs[i].second &&
                    (F & pairs[j].first) == w.witnesses[k]) {
                    r.ok = false;
                    r.violated_condition = 3;
                    r.detail = "member " + std::to_string(k) + " links (Y_" + std::to_string(i) +
                               ", Z_" + std::to_string(i) + ") to Y_" + std::to_string(j);
                    return r;
                }
            }
    return r;
}

namespace {

// N(S) = {T in binom([n], |S|) : |T n S| >= |S| - 1}, i.e. S and all
// one-element swaps.
std::vector<SubsetMask> near_sets(const SubsetMask& S) {
    std::vector<SubsetMask> out;
    out.push_back(S);
    const int n = S.ground_set();
    for (int a : S.elements()) {
        SubsetMask base = S;
        base.remove(a);
        for (int b = 1; b <= n; ++b) {
            if (S.contains(b)) continue;
            SubsetMask t = base;
            t.add(b);
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace

YZSelection greedy_select_yz(const WitnessedFamily& w, int gamma) {
    if (gamma < 1) throw std::invalid_argument("greedy_select_yz: gamma >= 1 required");
    const int n = w.family.n;
    const int d = w.d;

    std::set<SubsetMask> pool;
    {
        std::unordered_set<SubsetMask::u128> in_family;
        for (const auto& F : w.family.members) in_family.insert(F.raw());
        KSubsetStream st(n, d + 1);
        SubsetMask t;
        while (st.next(t))
            if (!in_family.count(t.raw())) pool.insert(t);
    }
    YZSelection sel;
    sel.pool_initial = pool.size();

    // Step 2: members with small witnesses wipe out their neighborhoods.
    for (std::size_t i = 0; i < w.family.size(); ++i)
        if (w.witnesses[i].cardinality() <= d - 3)
            for (const auto& t : near_sets(w.family.members[i])) pool.erase(t);
    sel.pool_after_step2 = pool.size();

    // D = size-d witnesses; D' = d-sets covered by >= gamma members whose
    // witness has size d-2.
    std::unordered_set<SubsetMask::u128> blocked;
    for (const auto& b : w.witnesses)
        if (b.cardinality() == d) blocked.insert(b.raw());
    {
        std::unordered_map<SubsetMask::u128, int> cover;
        for (std::size_t k = 0; k < w.family.size(); ++k) {
            if (w.witnesses[k].cardinality() != d - 2) continue;
            const SubsetMask& F = w.family.members[k];
            for (int a : F.elements()) {
                SubsetMask B = F;
                B.remove(a);
                ++cover[B.raw()];
            }
        }
        for (const auto& [mask, cnt] : cover)
            if (cnt >= gamma) blocked.insert(mask);
    }

    while (true) {
        // colex-first Z in shadow_d(pool) outside D u D'
        std::set<SubsetMask> shadow;
        for (const auto& Y : pool)
            for (int a : Y.elements()) {
                SubsetMask Z = Y;
                Z.remove(a);
                shadow.insert(Z);
            }
        std::optional<SubsetMask> zpick;
        for (const auto& Z : shadow)
            if (!blocked.count(Z.raw())) {
                zpick = Z;
                break;
            }
        if (!zpick) break;  // termination: shadow_d(pool) inside D u D'

        // colex-first Y in the pool containing Z
        std::optional<SubsetMask> ypick;
        for (int x = 1; x <= n; ++x) {
            if (zpick->contains(x)) continue;
            SubsetMask cand = *zpick;
            cand.add(x);
            if (pool.count(cand)) {
                ypick = cand;
                break;
            }
        }
        if (!ypick) throw std::logic_error("greedy_select_yz: shadow element without a pool parent");

        YZStep step;
        step.pool_before = pool.size();
        step.Y = *ypick;
        step.Z = *zpick;

        std::size_t before = pool.size();
        for (const auto& t : near_sets(*ypick)) pool.erase(t);
        step.removed_neighborhood = before - pool.size();

        before = pool.size();
        for (std::size_t k = 0; k < w.family.size(); ++k) {
            const SubsetMask& F = w.family.members[k];
            if ((F & *ypick) != *zpick) continue;
            for (auto it = pool.begin(); it != pool.end();) {
                if ((*it & F) == w.witnesses[k])
                    it = pool.erase(it);
                else
                    ++it;
            }
        }
        step.removed_matches = before - pool.size();

        sel.pairs.emplace_back(*ypick, *zpick);
        sel.trace.push_back(step);
    }
    sel.pool_final = pool.size();
    return sel;
}

ExactMatrix assemble_matrix(const WitnessedFamily& w, const YZSelection& yz) {
    const int n = w.family.n;
    const int d = w.d;
    const std::uint64_t s = yz.pairs.size();
    const std::uint64_t m = w.family.size();
    std::uint64_t hcount = 0;
    for (int i = 0; i <= d - 1; ++i) hcount += binom(n, i);
    const std::uint64_t side = s + m + hcount;
    if (side > 50000) throw std::invalid_argument("assemble_matrix: side exceeds 50000");

    std::vector<SubsetMask> hsets;
    hsets.reserve(hcount);
    for (int i = 0; i <= d - 1; ++i) {
        KSubsetStream st(n, i);
        SubsetMask h;
        while (st.next(h)) hsets.push_back(h);
    }

    std::vector<SubsetMask> points;
    points.reserve(side);
    for (const auto& [Y, Z] : yz.pairs) {
        (void)Z;
        points.push_back(Y);
    }
    for (const auto& F : w.family.members) points.push_back(F);
    for (const auto& H : hsets) points.push_back(H);

    ExactMatrix mx(side, side);
    for (std::size_t r = 0; r < side; ++r) {
        const SubsetMask& p = points[r];
        std::size_t c = 0;
        for (const auto& [Y, Z] : yz.pairs) {
            (void)Y;
            mx.at(r, c++) = eval_poly_y(Z, p);
        }
        for (std::size_t k = 0; k < w.family.size(); ++k)
            mx.at(r, c++) = eval_poly_f(w.family.members[k], w.witnesses[k], p);
        for (const auto& H : hsets) mx.at(r, c++) = eval_poly_h(H, p, d);
    }
    return mx;
}

Certificate certify(const WitnessedFamily& w, int gamma) {
    w.validate();
    Certificate cert;
    cert.n = w.family.n;
    cert.d = w.d;
    cert.gamma = gamma;
    cert.witnessed = w;
    cert.family_sha256 = sha256_hex(serialize_family(w.family));
    for (const auto& b : w.witnesses)
        if (b.cardinality() == w.d) ++cert.size_d_witness_count;

    YZSelection yz = greedy_select_yz(w, gamma);
    YZConditionReport cond = verify_yz_conditions(w, yz);
    if (!cond.ok)
        throw std::logic_error("certify: greedy selection violated condition " +
                               std::to_string(cond.violated_condition) + ": " + cond.detail);
    cert.yz_pairs = yz.pairs;

    ExactMatrix mx = assemble_matrix(w, yz);
    cert.matrix_side = mx.rows();
    cert.rank = exact_rank(mx);
    cert.valid = cert.rank == cert.matrix_side;

    const std::uint64_t s = yz.pairs.size();
    cert.bound = binom(cert.n, cert.d) - s;
    if (cert.valid && w.family.size() > cert.bound)
        throw std::logic_error(
            "FALSIFICATION: certified bound violated, |F| = " + std::to_string(w.family.size()) +
            " > binom(n,d) - s = " + std::to_string(cert.bound));
    if (cert.size_d_witness_count > binom(cert.n - 1, cert.d))
        throw std::logic_error("FALSIFICATION: size-d witness count exceeds binom(n-1,d)");
    return cert;
}

std::optional<std::vector<mpq_class>> exact_kernel_vector(const ExactMatrix& mx) {
    const std::size_t rows = mx.rows(), cols = mx.cols();
    // Gauss-Jordan over the rationals.
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = mx.at(r, c);

    std::vector<long long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        mpq_class inv = a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_of_col[col] = static_cast<long long>(rank);
        ++rank;
    }
    // first free column yields a kernel vector
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<mpq_class> v(cols, mpq_class(0));
        v[col] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][col];
        return v;
    }
    return std::nullopt;
}

namespace {

nlohmann::json mask_elems(const SubsetMask& m) { return m.elements(); }

SubsetMask mask_from_elems(int n, const nlohmann::json& j) {
    SubsetMask m(n);
    for (const auto& e : j) m.add(e.get<int>());
    return m;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["gamma"] = cert.gamma;
    j["family_sha256"] = cert.family_sha256;
    nlohmann::json wits = nlohmann::json::array();
    for (std::size_t i = 0; i < cert.witnessed.size(); ++i)
        wits.push_back({{"member", mask_elems(cert.witnessed.family.members[i])},
                        {"witness", mask_elems(cert.witnessed.witnesses[i])}});
    j["witnesses"] = wits;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [Y, Z] : cert.yz_pairs) pairs.push_back({{"y", mask_elems(Y)}, {"z", mask_elems(Z)}});
    j["yz_pairs"] = pairs;
    j["matrix_side"] = cert.matrix_side;
    j["rank"] = cert.rank;
    j["bound"] = cert.bound;
    j["valid"] = cert.valid;
    j["size_d_witness_count"] = cert.size_d_witness_count;
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert;
    cert.n = j.at("n").get<int>();
    cert.d = j.at("d").get<int>();
    cert.gamma = j.at("gamma").get<int>();
    cert.family_sha256 = j.at("family_sha256").get<std::string>();
    cert.witnessed.family = Family(cert.n, cert.d + 1);
    cert.witnessed.d = cert.d;
    for (const auto& item : j.at("witnesses")) {
        cert.witnessed.family.members.push_back(mask_from_elems(cert.n, item.at("member")));
        cert.witnessed.witnesses.push_back(mask_from_elems(cert.n, item.at("witness")));
    }
    for (const auto& item : j.at("yz_pairs"))
        cert.yz_pairs.emplace_back(mask_from_elems(cert.n, item.at("y")),
                                   mask_from_elems(cert.n, item.at("z")));
    cert.matrix_side = j.at("matrix_side").get<std::uint64_t>();
    cert.rank = j.at("rank").get<std::uint64_t>();
    cert.bound = j.at("bound").get<std::uint64_t>();
    cert.valid = j.at("valid").get<bool>();
    cert.size_d_witness_count = j.value("size_d_witness_count", std::uint64_t{0});
    return cert;
}

VerifyOutcome verify_certificate(const Certificate& cert) {
    VerifyOutcome out;
    try {
        cert.witnessed.validate();
    } catch (const std::exception& e) {
        out.message = std::string("embedded witnessed family invalid: ") + e.what();
        return out;
    }
    std::string digest = sha256_hex(serialize_family(cert.witnessed.family));
    if (digest != cert.family_sha256) {
        out.message = "family digest mismatch";
        return out;
    }
    YZSelection yz;
    yz.pairs = cert.yz_pairs;
    YZConditionReport cond = verify_yz_conditions(cert.witnessed, yz);
    if (!cond.ok) {
        out.message = "yz condition " + std::to_string(cond.violated_condition) +
                      " violated: " + cond.detail;
        return out;
    }
    ExactMatrix mx = assemble_matrix(cert.witnessed, yz);
    std::uint64_t rank = exact_rank(mx);
    if (mx.rows() != cert.matrix_side || rank != cert.rank) {
        out.message = "rank recomputation mismatch: side " + std::to_string(mx.rows()) + " rank " +
                      std::to_string(rank);
        return out;
    }
    std::uint64_t bound = binom(cert.n, cert.d) - cert.yz_pairs.size();
    if (bound != cert.bound || cert.valid != (rank == mx.rows())) {
        out.message = "bound or validity mismatch";
        return out;
    }
    if (cert.valid && cert.witnessed.size() > bound) {
        out.message = "FALSIFICATION: family exceeds its certified bound";
        return out;
    }
    out.ok = true;
    out.message = "certificate verified: rank " + std::to_string(rank) + "/" +
                  std::to_string(mx.rows()) + ", bound " + std::to_string(bound);
    return out;
}

}  // namespace vclab
