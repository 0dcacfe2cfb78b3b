#pragma once

#include <string_view>

// IRIs of the vocabulary terms the metrics look at.
namespace wiseowl::vocab {

namespace rdf {
inline constexpr std::string_view kNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kFirst = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view kRest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view kNil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view kNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kSubPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view kDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kComment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view kSeeAlso = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
inline constexpr std::string_view kIsDefinedBy = "http://www.w3.org/2000/01/rdf-schema#isDefinedBy";
}  // namespace rdfs

namespace owl {
inline constexpr std::string_view kNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kNamedIndividual = "http://www.w3.org/2002/07/owl#NamedIndividual";
inline constexpr std::string_view kObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kAnnotationProperty = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view kRestriction = "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view kEquivalentClass = "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view kEquivalentProperty = "http://www.w3.org/2002/07/owl#equivalentProperty";
inline constexpr std::string_view kDisjointWith = "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view kInverseOf = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view kOnProperty = "http://www.w3.org/2002/07/owl#onProperty";
inline constexpr std::string_view kSomeValuesFrom = "http://www.w3.org/2002/07/owl#someValuesFrom";
inline constexpr std::string_view kAllValuesFrom = "http://www.w3.org/2002/07/owl#allValuesFrom";
inline constexpr std::string_view kHasValue = "http://www.w3.org/2002/07/owl#hasValue";
inline constexpr std::string_view kIntersectionOf = "http://www.w3.org/2002/07/owl#intersectionOf";
inline constexpr std::string_view kUnionOf = "http://www.w3.org/2002/07/owl#unionOf";
inline constexpr std::string_view kComplementOf = "http://www.w3.org/2002/07/owl#complementOf";
inline constexpr std::string_view kImports = "http://www.w3.org/2002/07/owl#imports";
inline constexpr std::string_view kVersionIri = "http://www.w3.org/2002/07/owl#versionIRI";
}  // namespace owl

namespace skos {
inline constexpr std::string_view kNs = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kConcept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr std::string_view kPrefLabel = "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view kAltLabel = "http://www.w3.org/2004/02/skos/core#altLabel";
inline constexpr std::string_view kHiddenLabel = "http://www.w3.org/2004/02/skos/core#hiddenLabel";
inline constexpr std::string_view kDefinition = "http://www.w3.org/2004/02/skos/core#definition";
inline constexpr std::string_view kNote = "http://www.w3.org/2004/02/skos/core#note";
inline constexpr std::string_view kScopeNote = "http://www.w3.org/2004/02/skos/core#scopeNote";
inline constexpr std::string_view kExample = "http://www.w3.org/2004/02/skos/core#example";
}  // namespace skos

namespace skosxl {
inline constexpr std::string_view kNs = "http://www.w3.org/2008/05/skos-xl#";
inline constexpr std::string_view kPrefLabel = "http://www.w3.org/2008/05/skos-xl#prefLabel";
inline constexpr std::string_view kAltLabel = "http://www.w3.org/2008/05/skos-xl#altLabel";
inline constexpr std::string_view kHiddenLabel = "http://www.w3.org/2008/05/skos-xl#hiddenLabel";
inline constexpr std::string_view kLiteralForm = "http://www.w3.org/2008/05/skos-xl#literalForm";
}  // namespace skosxl

namespace dcterms {
inline constexpr std::string_view kNs = "http://purl.org/dc/terms/";
inline constexpr std::string_view kDescription = "http://purl.org/dc/terms/description";
inline constexpr std::string_view kTitle = "http://purl.org/dc/terms/title";
}  // namespace dcterms

namespace dc {
inline constexpr std::string_view kNs = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kDescription = "http://purl.org/dc/elements/1.1/description";
inline constexpr std::string_view kTitle = "http://purl.org/dc/elements/1.1/title";
}  // namespace dc

namespace obo {
inline constexpr std::string_view kNs = "http://purl.obolibrary.org/obo/";
// IAO "definition".
inline constexpr std::string_view kDefinition = "http://purl.obolibrary.org/obo/IAO_0000115";
}  // namespace obo

namespace oboinowl {
inline constexpr std::string_view kNs = "http://www.geneontology.org/formats/oboInOwl#";
inline constexpr std::string_view kHasDefinition = "http://www.geneontology.org/formats/oboInOwl#hasDefinition";
inline constexpr std::string_view kHasExactSynonym = "http://www.geneontology.org/formats/oboInOwl#hasExactSynonym";
inline constexpr std::string_view kHasRelatedSynonym = "http://www.geneontology.org/formats/oboInOwl#hasRelatedSynonym";
inline constexpr std::string_view kHasBroadSynonym = "http://www.geneontology.org/formats/oboInOwl#hasBroadSynonym";
inline constexpr std::string_view kHasNarrowSynonym = "http://www.geneontology.org/formats/oboInOwl#hasNarrowSynonym";
}  // namespace oboinowl

namespace xsd {
inline constexpr std::string_view kNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
}  // namespace xsd

}  // namespace wiseowl::vocab
