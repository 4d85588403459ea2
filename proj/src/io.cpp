#include "bfacet/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bfacet {

PointConfig PointSetFile::to_config() const { return PointConfig(dim, points); }

MarkedPolytope PointSetFile::to_marked_polytope() const {
    PointConfig config = to_config();
    std::vector<std::vector<Point>> marked;
    for (const auto& mark : marks) {
        std::vector<Point> members;
        for (std::size_t idx : mark) {
            if (idx >= points.size()) throw ParseError("mark index out of range");
            members.push_back(points[idx]);
        }
        marked.push_back(std::move(members));
    }
    return MarkedPolytope(std::move(config), marked);
}

PointSetFile parse_point_set(std::istream& in) {
    PointSetFile file;
    std::string line;
    int lineno = 0;
    bool have_dim = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (!have_dim) {
            if (first != "dim") throw ParseError("line 1: expected 'dim <n>' header");
            if (!(ls >> file.dim) || file.dim < 1) throw ParseError("invalid dimension");
            have_dim = true;
            continue;
        }
        if (first == "mark") {
            std::vector<std::size_t> mark;
            long long idx;
            while (ls >> idx) {
                if (idx < 1 || static_cast<std::size_t>(idx) > file.points.size())
                    throw ParseError("line " + std::to_string(lineno) + ": mark index out of range");
                mark.push_back(static_cast<std::size_t>(idx - 1));
            }
            if (mark.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty mark");
            std::sort(mark.begin(), mark.end());
            file.marks.push_back(std::move(mark));
            continue;
        }
        Point p;
        std::istringstream ps(line);
        long long coord;
        while (ps >> coord) {
            if (coord < 0)
                throw ParseError("line " + std::to_string(lineno) + ": coordinates must be nonnegative");
            p.push_back(coord);
        }
        if (!ps.eof()) throw ParseError("line " + std::to_string(lineno) + ": malformed point");
        if (static_cast<int>(p.size()) != file.dim)
            throw ParseError("line " + std::to_string(lineno) + ": point has " +
                             std::to_string(p.size()) + " coordinates, expected " + std::to_string(file.dim));
        file.points.push_back(std::move(p));
    }
    if (!have_dim) throw ParseError("missing 'dim <n>' header");
    if (file.points.empty()) throw ParseError("no points in file");
    return file;
}

PointSetFile load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_point_set(in);
}

std::string write_point_set(const PointSetFile& file) {
    std::ostringstream out;
    out << "dim " << file.dim << "\n";
    for (const Point& p : file.points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << "\n";
    }
    for (const auto& mark : file.marks) {
        out << "mark";
        for (std::size_t idx : mark) out << ' ' << (idx + 1);
        out << "\n";
    }
    return out.str();
}

}  // namespace bfacet
