#include "xc/stdlib.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "xc/diag.hpp"
#include "xc/parse.hpp"
#include "xc/syntax.hpp"

namespace xc {

const std::string& prelude_source() {
    static const std::string src =
        "def nbr(i, s) { exchange(i, (o, n) => return n send s) }\n"
        "def old(i, s) { exchange(i, (o, n) => return o send s) }\n";
    return src;
}

Program load_program(const std::string& source) {
    SourceProgram user = parse_program(source);
    std::set<std::string> user_names;
    for (const DefItem& d : user.items) user_names.insert(d.name);

    // The prelude parses as a program with a dummy main.
    SourceProgram prelude = parse_program(prelude_source() + "0");
    Program out;
    for (DefItem& d : prelude.items) {
        if (user_names.count(d.name)) continue;
        d.from_prelude = true;
        out.surface.items.push_back(std::move(d));
    }
    for (DefItem& d : user.items) out.surface.items.push_back(std::move(d));
    out.surface.main = user.main;

    out.core = annotate(desugar(program_to_expr(out.surface)));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace xc
