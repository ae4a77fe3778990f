#pragma once

#include <tclique/rulecheck.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace r5_table {

// R5 table of broken rules, 1-based: ordering | x | rule role=vertex ...
inline const char * const table = R"(1 2 3 4 5 | 1 | 1
1 2 3 4 5 | 2 | 4 a=2 b=5 u=4 v=1 w=5
1 2 3 4 5 | 3 | 2 a=1 b=2 c=5 d=4
1 2 3 4 5 | 4 | 2 a=1 b=2 c=5 d=4
1 2 3 4 5 | 5 | 3 a=1 b=4 u=1 v=5 w=2
1 2 4 3 5 | 1 | 1
1 2 4 3 5 | 2 | 4 a=2 b=5 u=4 v=1 w=5
1 2 4 3 5 | 3 | 3 a=1 b=4 u=1 v=5 w=2
1 2 4 3 5 | 4 | 2 a=1 b=2 c=5 d=4
1 2 4 3 5 | 5 | 3 a=1 b=4 u=1 v=5 w=2
1 2 4 5 3 | 1 | 1
1 2 4 5 3 | 2 | 4 a=2 b=5 u=4 v=1 w=5
1 2 4 5 3 | 3 | 3 a=1 b=5 u=4 v=3 w=5
1 2 4 5 3 | 4 | 2 a=1 b=2 c=5 d=4
1 2 4 5 3 | 5 | 3 a=1 b=4 u=1 v=5 w=2
1 3 2 4 5 | 1 | 1
1 3 2 4 5 | 2 | 4 a=2 b=5 u=4 v=1 w=5
1 3 2 4 5 | 3 | 4 a=3 b=5 u=4 v=1 w=5
1 3 2 4 5 | 4 | 2 a=1 b=2 c=5 d=4
1 3 2 4 5 | 5 | 3 a=1 b=4 u=1 v=5 w=2
1 3 4 2 5 | 1 | 1
1 3 4 2 5 | 2 | 3 a=1 b=4 u=3 v=2 w=4
1 3 4 2 5 | 3 | 4 a=3 b=5 u=4 v=1 w=5
1 3 4 2 5 | 4 | 4 a=4 b=5 u=4 v=1 w=5
1 3 4 2 5 | 5 | 3 a=1 b=2 u=1 v=5 w=2
1 3 4 5 2 | 1 | 1
1 3 4 5 2 | 2 | 3 a=1 b=4 u=3 v=2 w=4
1 3 4 5 2 | 3 | 4 a=3 b=2 u=4 v=1 w=5
1 3 4 5 2 | 4 | 4 a=4 b=2 u=4 v=1 w=5
1 3 4 5 2 | 5 | 3 a=1 b=4 u=3 v=2 w=4
1 4 2 3 5 | 1 | 1
1 4 2 3 5 | 2 | 4 a=2 b=5 u=2 v=4 w=3
1 4 2 3 5 | 3 | 3 a=1 b=2 u=1 v=5 w=2
1 4 2 3 5 | 4 | 4 a=4 b=5 u=4 v=1 w=5
1 4 2 3 5 | 5 | 3 a=1 b=2 u=1 v=5 w=2
1 4 2 5 3 | 1 | 1
1 4 2 5 3 | 2 | 4 a=2 b=3 u=2 v=4 w=3
1 4 2 5 3 | 3 | 3 a=1 b=5 u=4 v=3 w=5
1 4 2 5 3 | 4 | 4 a=4 b=5 u=4 v=1 w=5
1 4 2 5 3 | 5 | 3 a=1 b=2 u=1 v=5 w=2
1 4 5 2 3 | 1 | 1
1 4 5 2 3 | 2 | 2 a=4 b=5 c=3 d=2
1 4 5 2 3 | 3 | 3 a=1 b=5 u=4 v=3 w=5
1 4 5 2 3 | 4 | 4 a=4 b=2 u=4 v=1 w=5
1 4 5 2 3 | 5 | 4 a=5 b=3 u=2 v=4 w=3)";

struct Row
{
    tclique::RuleWitness witness;
    std::string text;
};

/// The rows as 0-based witnesses.
inline std::vector<Row> rows()
{
    std::vector<Row> out;
    std::istringstream in(table);
    std::string line;
    while (std::getline(in, line)) {
        auto bar1 = line.find('|'), bar2 = line.find('|', bar1 + 1);
        std::istringstream ord(line.substr(0, bar1)), x(line.substr(bar1 + 1)), rest(line.substr(bar2 + 1));
        std::vector<tclique::Vertex> seq;
        for (unsigned v; ord >> v;)
            seq.push_back(v - 1);
        Row row;
        row.text = line;
        row.witness.ordering = tclique::Ordering(seq);
        unsigned pivot = 0;
        x >> pivot;
        row.witness.x = pivot - 1;
        rest >> row.witness.rule;
        for (std::string role; rest >> role;)
            row.witness.roles.emplace_back(role[0], static_cast<tclique::Vertex>(std::stoul(role.substr(2)) - 1));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace r5_table
