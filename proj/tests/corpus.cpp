#include "corpus.hpp"

namespace ricci::testing {

const std::vector<NamedGraph>& base_corpus() {
    static const std::vector<NamedGraph> graphs = [] {
        std::vector<NamedGraph> out;
        for (int n = 2; n <= 10; ++n)
            out.push_back({"complete:" + std::to_string(n), complete_graph(n)});
        for (int n = 3; n <= 7; ++n)
            out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
        for (int s = 2; s <= 4; ++s) {
            std::string name = "bipartite:" + std::to_string(s) + "," + std::to_string(s);
            out.push_back({name, complete_bipartite_graph(s, s)});
        }
        out.push_back({"petersen", petersen_graph()});
        out.push_back({"rooks:4", rooks_graph(4)});
        out.push_back({"shrikhande", shrikhande_graph()});
        out.push_back({"paley:13", paley_graph(13)});
        out.push_back({"paley:17", paley_graph(17)});
        out.push_back({"hoffman-singleton", hoffman_singleton_graph()});
        return out;
    }();
    return graphs;
}

const std::vector<NamedGraph>& srg_corpus() {
    static const std::vector<NamedGraph> graphs = [] {
        std::vector<NamedGraph> out;
        out.push_back({"cycle:5", cycle_graph(5)});
        out.push_back({"bipartite:2,2", complete_bipartite_graph(2, 2)});
        out.push_back({"bipartite:3,3", complete_bipartite_graph(3, 3)});
        out.push_back({"bipartite:4,4", complete_bipartite_graph(4, 4)});
        out.push_back({"petersen", petersen_graph()});
        out.push_back({"rooks:4", rooks_graph(4)});
        out.push_back({"shrikhande", shrikhande_graph()});
        out.push_back({"paley:13", paley_graph(13)});
        out.push_back({"paley:17", paley_graph(17)});
        out.push_back({"hoffman-singleton", hoffman_singleton_graph()});
        return out;
    }();
    return graphs;
}

} // namespace ricci::testing
