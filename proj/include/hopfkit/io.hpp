#ifndef HOPFKIT_IO_HPP
#define HOPFKIT_IO_HPP

#include <array>
#include <map>
#include <stdexcept>

#include "hopfkit/gallery.hpp"

namespace hopfkit {
namespace io {

/// Malformed input (bad JSON, bad shape, unknown reference).  The CLI maps
/// this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A right module over the quantum coinvariants of a named bicomodule
/// algebra; the B-basis is the one `coinvariants` computes (echelon order).
struct BModuleSpec {
    std::string over;  // bicomodule algebra name
    int dim = 0;
    int b_dim = 0;
    std::vector<std::string> basis;
    Tensor action;  // (dim, b_dim, dim)
};

/// Everything a structure-constant file declares, with references resolved.
/// Declaration order is preserved for export and listing.
struct Workspace {
    FieldSpec field;
    std::vector<std::pair<std::string, std::string>> order;  // (name, kind)

    std::map<std::string, Algebra> algebras;
    std::map<std::string, Coalgebra> coalgebras;
    std::map<std::string, Bialgebra> bialgebras;
    std::map<std::string, HopfAlgebra> hopfs;
    std::map<std::string, LeftComoduleAlgebra> comodule_algebras;
    std::map<std::string, RightModuleCoalgebra> module_coalgebras;
    std::map<std::string, DKDatum> data;
    std::map<std::string, std::pair<std::string, DKModule>> dk_modules;  // datum name, module
    std::map<std::string, BicomoduleAlgebra> bicomodules;
    std::map<std::string, std::pair<std::string, YDModule>> yd_modules;  // ha name, module
    std::map<std::string, BModuleSpec> b_modules;

    std::map<std::string, std::string> over_refs;                        // name -> referenced name
    std::map<std::string, std::array<std::string, 3>> datum_refs;        // name -> (H, A, C)

    bool has(const std::string& name) const;
    /// The unique structure of a kind, or the named one; throws ParseError.
    std::string unique_name(const std::string& kind, const std::string& name_or_empty) const;
};

Workspace load_workspace(const std::string& text);

std::string save_workspace(const Workspace& ws);

/// Serialize one gallery entry (with its dependencies) to the file format.
std::string export_gallery(const std::string& name, FieldSpec f);

}  // namespace io
}  // namespace hopfkit

#endif
