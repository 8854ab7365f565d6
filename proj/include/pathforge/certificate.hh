/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_CERTIFICATE_HH
#define PATHFORGE_CERTIFICATE_HH 1

#include <pathforge/extract.hh>
#include <pathforge/generators.hh>
#include <pathforge/graph.hh>
#include <pathforge/minors.hh>
#include <pathforge/patterns.hh>
#include <pathforge/width.hh>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pathforge
{
    // Text certificate: a header line, a kind line, one "graph <role> <hash>"
    // line per referenced graph, then a kind-specific body, then "end".
    // Graphs are referenced by content_hash, never embedded.
    struct CertificateFile
    {
        std::string kind;
        std::vector<std::pair<std::string, std::string>> graphs;     // role, hash
        std::vector<std::string> body;
        std::vector<int> body_lines = {};   // source line of each body entry, 0 if built in memory

        auto hash_of(const std::string & role) const -> std::string;
    };

    auto certificate_for(const Graph & host, const PathDecomposition & pd) -> CertificateFile;
    auto certificate_for(const MinorModel & m) -> CertificateFile;
    auto certificate_for(const Embedding & e) -> CertificateFile;
    auto certificate_for(const SubdivisionEmbedding & e) -> CertificateFile;
    auto certificate_for(const WattleCertificate & w) -> CertificateFile;
    auto certificate_for(const Graph & host, const Distance5Partition & p) -> CertificateFile;
    auto certificate_for(const LineGraphEmbedding & e) -> CertificateFile;

    auto write_certificate(std::ostream & out, const CertificateFile & c) -> void;
    auto to_string(const CertificateFile & c) -> std::string;

    // Throws ParseError with the offending line number.
    auto parse_certificate(std::istream & in) -> CertificateFile;

    // Rebuild the certified object; throw ParseError naming the bad line.
    auto read_minor_model(const CertificateFile & c, const Graph & pattern, const Graph & host) -> MinorModel;
    auto read_wattle(const CertificateFile & c, const Graph & host) -> WattleCertificate;

    // Matches every referenced hash against the supplied graphs, rebuilds the
    // certified object and runs its validator. Empty means valid.
    auto verify_certificate(const CertificateFile & c, const std::vector<Graph> & graphs) -> std::vector<std::string>;
}

#endif
