#include "zetalab/cutset.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>

namespace zetalab {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

class Search {
  public:
    explicit Search(const RootedGraph& g) : g_(g) {
        for (const std::string& name : g.nodes) {
            index_.emplace(name, static_cast<int>(names_.size()));
            names_.push_back(name);
        }
        df_.assign(names_.size(), 0);
        pending_.resize(names_.size());
    }

    void run() {
        int root = index_.at(g_.root);
        std::vector<int> stack;
        df_[root] = 1;
        pending_[root] = fresh_pending(root);
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            if (pending_[v].empty()) {
                stack.pop_back();
                continue;
            }
            int sv = pending_[v].front();
            if (df_[sv] == 0) {
                df_[sv] = df_[v] + 1;
                pending_[sv] = fresh_pending(sv);
                consume(v, sv);
                stack.push_back(sv);
            } else {
                bool is_inverse = g_.directed ? (df_[v] > df_[sv] && v != sv) : true;
                if (is_inverse) inverse_.emplace_back(sv, v);
                consume(v, sv);
            }
        }
    }

    CutsetResult result(bool strict) const {
        CutsetResult out;
        std::vector<char> in_cut(names_.size(), 0);
        // later inverse edges cut first; each cut node is the first
        // component of the edge that closed against it
        for (auto it = inverse_.rbegin(); it != inverse_.rend(); ++it) {
            if (!in_cut[it->first]) {
                in_cut[it->first] = 1;
                out.cutset.push_back(names_[it->first]);
            }
        }
        if (strict) {
            for (const std::string& name : g_.nodes) {
                int v = index_.at(name);
                if (df_[v] == 0 || in_cut[v]) continue;
                const auto& nbs = g_.adjacency.at(name);
                if (std::find(nbs.begin(), nbs.end(), name) != nbs.end()) {
                    in_cut[v] = 1;
                    out.cutset.push_back(name);
                }
            }
        }
        for (const auto& edge : inverse_)
            out.inverse_edges.emplace_back(names_[edge.first], names_[edge.second]);
        for (std::size_t v = 0; v < names_.size(); ++v)
            if (df_[v] != 0) out.df[names_[v]] = df_[v];
        return out;
    }

  private:
    // neighbors of v in declaration order, self-loops dropped
    std::deque<int> fresh_pending(int v) const {
        std::deque<int> out;
        for (const std::string& nb : g_.adjacency.at(names_[v])) {
            int w = index_.at(nb);
            if (w != v) out.push_back(w);
        }
        return out;
    }

    static void erase_all(std::deque<int>& dq, int target) {
        dq.erase(std::remove(dq.begin(), dq.end(), target), dq.end());
    }

    // every parallel copy of the handled edge disappears at once; the
    // undirected case also drops the reversed copy from sv's list
    void consume(int v, int sv) {
        erase_all(pending_[v], sv);
        if (!g_.directed) erase_all(pending_[sv], v);
    }

    const RootedGraph& g_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<long> df_;
    std::vector<std::deque<int>> pending_;
    std::vector<std::pair<int, int>> inverse_;
};

void validate(const RootedGraph& g) {
    if (g.nodes.empty()) throw DomainError("graph has no nodes");
    if (g.adjacency.find(g.root) == g.adjacency.end())
        throw DomainError("root is not a declared node");
    for (const auto& [name, nbs] : g.adjacency)
        for (const std::string& nb : nbs)
            if (g.adjacency.find(nb) == g.adjacency.end())
                throw DomainError("neighbor '" + nb + "' of '" + name + "' is not declared");
}

CutsetResult run_search(const RootedGraph& g, bool strict) {
    validate(g);
    Search s(g);
    s.run();
    return s.result(strict);
}

} // namespace

RootedGraph parse_graph(std::istream& in) {
    RootedGraph g;
    std::string line;
    int stage = 0;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (stage == 0) {
            std::string kw;
            ls >> kw;
            if (kw != "root" || !(ls >> g.root))
                throw ParseError("expected 'root <id>' as the first line");
            std::string extra;
            if (ls >> extra) throw ParseError("unexpected token after root id: " + extra);
            stage = 1;
        } else if (stage == 1) {
            std::string kw, flag;
            ls >> kw;
            if (kw != "directed" || !(ls >> flag) || (flag != "true" && flag != "false"))
                throw ParseError("expected 'directed true|false' as the second line");
            g.directed = (flag == "true");
            stage = 2;
        } else {
            std::string head;
            ls >> head;
            if (head.size() < 2 || head.back() != ':')
                throw ParseError("expected '<id>: <neighbors>' but got: " + line);
            std::string name = head.substr(0, head.size() - 1);
            if (g.adjacency.count(name)) throw ParseError("node '" + name + "' declared twice");
            g.nodes.push_back(name);
            auto& nbs = g.adjacency[name];
            std::string nb;
            while (ls >> nb) nbs.push_back(nb);
        }
    }
    if (stage < 2) throw ParseError("graph needs 'root' and 'directed' header lines");
    if (g.nodes.empty()) throw ParseError("graph declares no nodes");
    if (!g.adjacency.count(g.root)) throw ParseError("root '" + g.root + "' is not declared");
    for (const auto& [name, nbs] : g.adjacency)
        for (const std::string& x : nbs)
            if (!g.adjacency.count(x))
                throw ParseError("neighbor '" + x + "' of '" + name + "' is not declared");
    return g;
}

RootedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

CutsetResult cutset_undirected(const RootedGraph& g) {
    if (g.directed) throw DomainError("graph is directed, use the directed search");
    return run_search(g, false);
}

CutsetResult cutset_directed(const RootedGraph& g, bool strict) {
    if (!g.directed) throw DomainError("graph is undirected, use the undirected search");
    return run_search(g, strict);
}

} // namespace zetalab
