#include "tradenet/export.hpp"

#include "tradenet/csv.hpp"
#include "tradenet/errors.hpp"

#include <fstream>
#include <sstream>

namespace tradenet {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_graphml(const TradeGraph& graph, const Partition* partition, std::ostream& os) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<graphml>\n";
    if (partition) {
        os << "  <key id=\"region\" for=\"node\" attr.name=\"region\" attr.type=\"string\"/>\n";
    }
    os << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    os << "  <graph edgedefault=\"directed\">\n";
    for (size_t i = 0; i < graph.node_count(); ++i) {
        os << "    <node id=\"" << xml_escape(graph.label(static_cast<int>(i))) << "\"";
        if (partition) {
            os << ">\n      <data key=\"region\">"
               << xml_escape(partition->label_of(static_cast<int>(i)))
               << "</data>\n    </node>\n";
        } else {
            os << "/>\n";
        }
    }
    for (const auto& [s, t, w] : graph.edges()) {
        os << "    <edge source=\"" << xml_escape(graph.label(s)) << "\" target=\""
           << xml_escape(graph.label(t)) << "\">\n      <data key=\"weight\">"
           << csv::format_double(w) << "</data>\n    </edge>\n";
    }
    os << "  </graph>\n</graphml>\n";
}

} // namespace

void emit_graph_export(const TradeGraph& graph, const Partition* partition,
                       ExportFormat format, const std::filesystem::path& path) {
    if (format == ExportFormat::edge_csv) {
        write_edge_list_csv(graph, path);
        return;
    }
    std::ostringstream body;
    write_graphml(graph, partition, body);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << body.str();
    if (!out.flush()) {
        throw IoError("failed writing " + path.string());
    }
}

} // namespace tradenet
