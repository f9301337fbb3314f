#include "buchiff/buchi.hpp"
#include "buchiff/bounds.hpp"

namespace buchiff {

CensusReport census(const QForm& F, const std::vector<QPoint>& points, long mu) {
    if (mu < 1) throw DomainError("powerfulness threshold must be >= 1");
    CensusReport r;
    r.mu = mu;
    r.kind = classify(F).kind;
    r.bound_m = bound_M(F.n(), 0);
    for (const QPoint& b : points) {
        CensusEntry e;
        e.point = b;
        QX value = evaluate(F, b);
        if (value.is_zero()) {
            e.degenerate = true;
            r.degenerate.push_back(b);
        } else {
            e.max_k = max_powerful(value);
            // unbounded counts for every threshold
            if (!e.max_k || *e.max_k >= mu) r.powerful.push_back(e);
        }
        r.tested.push_back(e);
    }
    // a conclusion-branch form may be powerful everywhere; anything else must
    // stay under the census bound
    r.consistent = r.kind != FormClass::Other ||
                   Int(static_cast<long long>(r.powerful.size())) < r.bound_m;
    return r;
}

} // namespace buchiff
