#include "ecom/grpcoh/group_module.hpp"

#include <map>

#include "ecom/exactla/smith.hpp"

namespace ecom::grpcoh {

GroupModule::GroupModule(std::shared_ptr<const FiniteGroup> g, std::string name, std::size_t rank,
                         std::vector<IntMatrix> act)
    : group_(std::move(g)), name_(std::move(name)), rank_(rank), action_(std::move(act)) {
    verify();
}

void GroupModule::verify() const {
    const FiniteGroup& g = *group_;
    if (action_.size() != g.order()) throw HomomorphismFailure(name_ + ": action not defined on every element");
    for (const auto& m : action_)
        if (m.rows() != rank_ || m.cols() != rank_) throw ShapeMismatch(name_ + ": action matrix has wrong size");
    if (action_[g.identity()] != IntMatrix::identity(rank_))
        throw HomomorphismFailure(name_ + ": identity does not act trivially");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (action_[a] * action_[b] != action_[g.mul(a, b)])
                throw HomomorphismFailure(name_ + ": rho(gh) != rho(g) rho(h) at elements " + std::to_string(a) +
                                          ", " + std::to_string(b));
}

GroupModule GroupModule::from_generators(std::shared_ptr<const FiniteGroup> group, std::string name,
                                         std::size_t rank, const std::vector<IntMatrix>& generator_action) {
    const FiniteGroup& g = *group;
    if (generator_action.size() != g.generators().size())
        throw ShapeMismatch(name + ": expected " + std::to_string(g.generators().size()) + " generator matrices");
    std::map<std::size_t, const IntMatrix*> by_element;
    for (std::size_t k = 0; k < generator_action.size(); ++k) by_element[g.generators()[k]] = &generator_action[k];
    std::vector<IntMatrix> act(g.order());
    act[0] = IntMatrix::identity(rank);
    for (std::size_t e = 1; e < g.order(); ++e)
        act[e] = *by_element.at(g.word_generator(e)) * act[g.word_parent(e)];
    return GroupModule(std::move(group), std::move(name), rank, std::move(act));
}

GroupModule GroupModule::from_function(std::shared_ptr<const FiniteGroup> group, std::string name, std::size_t rank,
                                       const std::function<IntMatrix(std::size_t)>& action) {
    std::vector<IntMatrix> act;
    for (std::size_t e = 0; e < group->order(); ++e) act.push_back(action(e));
    return GroupModule(std::move(group), std::move(name), rank, std::move(act));
}

std::vector<IntMatrix> GroupModule::generator_matrices() const {
    std::vector<IntMatrix> out;
    for (auto g : group_->generators()) out.push_back(action_[g]);
    return out;
}

std::vector<long> GroupModule::character() const {
    std::vector<long> chi;
    for (const auto& m : action_) {
        exactla::Integer t = 0;
        for (std::size_t i = 0; i < rank_; ++i) t += m(i, i);
        chi.push_back(t.get_si());
    }
    return chi;
}

IntMatrix GroupModule::invariants_brute_force() const {
    IntMatrix stacked(rank_ * group_->order(), rank_);
    for (std::size_t e = 0; e < group_->order(); ++e)
        stacked.set_block(e * rank_, 0, action_[e] - IntMatrix::identity(rank_));
    return exactla::kernel_basis(stacked);
}

GroupModule tensor(const GroupModule& a, const GroupModule& b) {
    if (a.group_ptr() != b.group_ptr() && a.group().canonical_text() != b.group().canonical_text())
        throw ShapeMismatch("tensor of modules over different groups");
    return GroupModule::from_function(a.group_ptr(), a.name() + "⊗" + b.name(), a.rank() * b.rank(),
                                      [&](std::size_t e) { return exactla::kronecker(a.action(e), b.action(e)); });
}

GroupModule direct_sum(const GroupModule& a, const GroupModule& b) {
    if (a.group_ptr() != b.group_ptr() && a.group().canonical_text() != b.group().canonical_text())
        throw ShapeMismatch("direct sum of modules over different groups");
    return GroupModule::from_function(a.group_ptr(), a.name() + "⊕" + b.name(), a.rank() + b.rank(),
                                      [&](std::size_t e) { return exactla::direct_sum(a.action(e), b.action(e)); });
}

GroupModule trivial_module(std::shared_ptr<const FiniteGroup> g, std::size_t rank) {
    return GroupModule::from_function(g, rank == 1 ? "trivial" : "trivial^" + std::to_string(rank), rank,
                                      [&](std::size_t) { return IntMatrix::identity(rank); });
}

namespace {

long parity(const Permutation& p) {
    long s = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

}  // namespace

GroupModule sign_module(std::shared_ptr<const FiniteGroup> g) {
    const auto* grp = g.get();
    return GroupModule::from_function(g, "sign", 1, [grp](std::size_t e) {
        IntMatrix m(1, 1);
        m(0, 0) = parity(grp->element(e));
        return m;
    });
}

GroupModule permutation_module(std::shared_ptr<const FiniteGroup> g) {
    const auto* grp = g.get();
    const std::size_t n = grp->degree();
    return GroupModule::from_function(g, "permutation", n, [grp, n](std::size_t e) {
        IntMatrix m(n, n);
        for (std::size_t x = 0; x < n; ++x) m(grp->element(e)[x], x) = 1;
        return m;
    });
}

std::shared_ptr<const FiniteGroup> sigma3() {
    static const std::shared_ptr<const FiniteGroup> g = std::make_shared<FiniteGroup>(symmetric_group(3));
    return g;
}

std::vector<std::string> sigma3_module_names() {
    return {"trivial", "sign", "standard", "standard'", "standard⊗standard", "standard⊗sign"};
}

GroupModule sigma3_module(const std::string& raw) {
    static const std::map<std::string, std::string> alias = {
        {"trivial", "trivial"},
        {"Z", "trivial"},
        {"sign", "sign"},
        {"S", "sign"},
        {"standard", "standard"},
        {"M", "standard"},
        {"standard'", "standard'"},
        {"M'", "standard'"},
        {"standard⊗standard", "standard⊗standard"},
        {"standard*standard", "standard⊗standard"},
        {"M⊗M", "standard⊗standard"},
        {"M*M", "standard⊗standard"},
        {"standard⊗sign", "standard⊗sign"},
        {"standard*sign", "standard⊗sign"},
        {"M_S", "standard⊗sign"},
        {"M⊗S", "standard⊗sign"},
        {"M*S", "standard⊗sign"},
    };
    const auto it = alias.find(raw);
    if (it == alias.end()) throw UnknownName("unknown Σ3 module '" + raw + "'");
    const std::string& name = it->second;
    const auto g = sigma3();
    auto two = [](long a, long b, long c, long d) { return IntMatrix::from_rows({{a, b}, {c, d}}); };

    if (name == "trivial") return trivial_module(g);
    if (name == "sign") return sign_module(g);
    if (name == "standard") return GroupModule::from_generators(g, name, 2, {two(0, -1, 1, -1), two(0, 1, 1, 0)});
    if (name == "standard'") return GroupModule::from_generators(g, name, 2, {two(0, -1, 1, -1), two(1, -1, 0, -1)});
    if (name == "standard⊗sign")
        return GroupModule::from_generators(g, name, 2, {two(0, -1, 1, -1), two(0, -1, -1, 0)});
    // standard⊗standard in the explicit basis; equals kronecker(M, M).
    const IntMatrix sigma = IntMatrix::from_rows({{0, 0, 0, 1}, {0, 0, -1, 1}, {0, -1, 0, 1}, {1, -1, -1, 1}});
    const IntMatrix tau = IntMatrix::from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
    return GroupModule::from_generators(g, name, 4, {sigma, tau});
}

}  // namespace ecom::grpcoh
