#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfstrat {

using VarId = int;

/// Global variable table. Ids double as the precedence of the fixed
/// monomial order: t < s < h1 < h2 < tt < ss < X1 < X2 < lambda < W1 < ...
/// Names used by the pipeline are pre-registered so that precedence does
/// not depend on parse order; unknown names are appended on first use.
class VarTable {
public:
    static VarTable& instance() {
        static VarTable t;
        return t;
    }

    VarId intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        VarId id = static_cast<VarId>(names_.size());
        names_.push_back(name);
        index_[name] = id;
        return id;
    }

    const std::string& name(VarId id) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (id < 0 || id >= static_cast<VarId>(names_.size()))
            throw std::out_of_range("VarTable: bad id");
        return names_[id];
    }

private:
    VarTable() {
        static const char* preset[] = {
            "t", "s", "h1", "h2", "tt", "ss", "X1", "X2", "lambda",
            "W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8",
            "W9", "W10", "W11", "W12", "W13", "W14", "W15", "W16",
            "v", "u", "x", "y", "z", "w", "r",
        };
        for (const char* n : preset) {
            index_[n] = static_cast<VarId>(names_.size());
            names_.push_back(n);
        }
    }

    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::map<std::string, VarId> index_;
};

inline VarId var(const std::string& name) { return VarTable::instance().intern(name); }
inline const std::string& var_name(VarId id) { return VarTable::instance().name(id); }

} // namespace surfstrat
