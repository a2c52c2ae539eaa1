#include "qseq/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>

namespace qseq {

void print_grid(std::ostream& os, const Report& report) {
    // Row order: first appearance.  Column order: sorted levels.
    std::vector<std::string> row_names;
    std::set<int> levels;
    std::map<std::string, std::map<int, const CheckResult*>> cells;
    std::size_t name_w = 5;
    for (const auto& it : report.items) {
        if (cells.find(it.check) == cells.end()) row_names.push_back(it.check);
        cells[it.check][it.level] = &it;
        levels.insert(it.level);
        name_w = std::max(name_w, it.check.size());
    }

    os << std::left << std::setw(static_cast<int>(name_w)) << "check";
    for (int lv : levels) {
        if (lv < 0)
            os << "  " << std::setw(6) << "*";
        else
            os << "  " << std::setw(6) << lv;
    }
    os << '\n';

    for (const auto& name : row_names) {
        os << std::left << std::setw(static_cast<int>(name_w)) << name;
        for (int lv : levels) {
            const auto& row = cells[name];
            const auto found = row.find(lv);
            const char* cell = "-";
            if (found != row.end()) {
                const CheckResult* cr = found->second;
                cell = cr->pass ? "ok" : (cr->conjectural ? "warn" : "FAIL");
            }
            os << "  " << std::setw(6) << cell;
        }
        os << '\n';
    }
    os << report.items.size() << " checks, " << report.fail_count() << " failed\n";
}

void print_lines(std::ostream& os, const Report& report) {
    for (const auto& it : report.items) {
        os << (it.pass ? "pass " : (it.conjectural ? "warn " : "FAIL ")) << it.check;
        if (it.level >= 0) os << " [" << it.level << "]";
        if (!it.detail.empty()) os << "  (" << it.detail << ")";
        os << '\n';
    }
}

}  // namespace qseq
