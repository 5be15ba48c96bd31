"""Tables for the DBpedia fixture corpus and the bundled gold files.

The fixture corpus mimics the shape of DBpedia resource descriptions
(types, categories, hypernyms, sameAs links and bookkeeping properties) for
the resources the linker probes. Identifier numbers are derived from hashes
and carry no meaning.
"""

PREFIXES = {
    "dbo": "http://dbpedia.org/ontology/",
    "dbp": "http://dbpedia.org/property/",
    "dcterms": "http://purl.org/dc/terms/",
    "foaf": "http://xmlns.com/foaf/0.1/",
    "gold": "http://purl.org/linguistics/gold/",
    "owl": "http://www.w3.org/2002/07/owl#",
    "prov": "http://www.w3.org/ns/prov#",
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "yago": "http://dbpedia.org/class/yago/",
}

CLASS_GROUPS = {
    "protocol": ["owl:Thing", "yago:WikicatNetworkProtocols", "yago:Protocol106665108", "yago:Abstraction100002137"],
    "bus": ["owl:Thing", "yago:WikicatIndustrialComputerNetworks", "yago:WikicatSerialBuses", "yago:Network108434259"],
    "wireless": ["owl:Thing", "yago:WikicatWirelessNetworking", "yago:Protocol106665108"],
    "iec": ["owl:Thing", "yago:WikicatIECStandards", "yago:Standard107260623"],
    "iso": ["owl:Thing", "yago:WikicatISOStandards", "yago:Standard107260623"],
    "standard": ["owl:Thing", "yago:Standard107260623", "yago:Abstraction100002137"],
    "xml": ["owl:Thing", "yago:WikicatIndustry-specificXML-basedStandards", "yago:WikicatXML-basedStandards",
            "yago:Standard107260623"],
    "language": ["owl:Thing", "yago:WikicatModelingLanguages", "yago:Language106282651"],
    "format": ["owl:Thing", "yago:WikicatComputerFileFormats", "yago:Format106636806"],
    "semweb": ["owl:Thing", "yago:WikicatSemanticWeb", "yago:WikicatW3CStandards", "yago:Standard107260623"],
    "org": ["owl:Thing", "dbo:Agent", "dbo:Organisation", "yago:WikicatStandardsOrganizations",
            "yago:Organization108008335"],
    "scor": ["owl:Thing", "dbo:Agent", "dbo:Person", "yago:Model105890249", "yago:WikicatSupplyChainManagement"],
    "city": ["owl:Thing", "dbo:Place", "dbo:PopulatedPlace", "dbo:Settlement", "yago:City108524735"],
}

# remote properties the endpoint declares; anything else is undeclared
DECLARED_PROPERTIES = {
    "rdfs:label": "rdf:Property",
    "rdfs:comment": "rdf:Property",
    "dbo:abstract": "owl:DatatypeProperty",
    "dbo:yearStarted": "owl:DatatypeProperty",
    "dbo:wikiPageID": "owl:DatatypeProperty",
    "dbo:wikiPageRevisionID": "owl:DatatypeProperty",
    "dbo:wikiPageLength": "owl:DatatypeProperty",
    "dbo:wikiPageWikiLink": "owl:ObjectProperty",
    "dbo:wikiPageExternalLink": "owl:ObjectProperty",
    "dcterms:subject": "rdf:Property",
    "gold:hypernym": "rdf:Property",
    "owl:sameAs": "rdf:Property",
    "foaf:isPrimaryTopicOf": "owl:ObjectProperty",
    "prov:wasDerivedFrom": "owl:ObjectProperty",
    "dbp:developer": "rdf:Property",
    "dbp:status": "rdf:Property",
}


def R(name, group, label, desc, subjects, hypernym="Standard", year=None, links=(), dbp=None, extra_types=()):
    return {
        "name": name, "group": group, "label": label, "comment": f"{label} is {desc}.",
        "subjects": list(subjects), "hypernym": hypernym, "year": year, "links": list(links),
        "dbp": dict(dbp or {}), "extra_types": list(extra_types),
    }


RESOURCES = [
    R("OPC_Unified_Architecture", "protocol", "OPC Unified Architecture",
      "a machine to machine communication protocol for industrial automation",
      ["Industrial_automation", "Network_protocols", "IEC_standards"], "Protocol", "2008",
      ["OPC_Foundation", "IEC_62541", "AutomationML", "MQTT"], {"developer": "dbr:OPC_Foundation", "status": "Published"},
      ["yago:WikicatIECStandards"]),
    R("AutomationML", "xml", "AutomationML", "a neutral XML-based data format for exchanging plant engineering information",
      ["Industrial_automation", "XML-based_standards", "IEC_standards"], "Format", "2006",
      ["COLLADA", "PLCopen", "CAEX"], {"developer": "dbr:AutomationML_e.V.", "extensions": ".aml"}),
    R("IEC_61131", "iec", "IEC 61131", "an IEC standard for programmable controllers",
      ["IEC_standards", "Programmable_logic_controllers"], "Standard", None, ["Programmable_logic_controller"]),
    R("IEC_61131-3", "iec", "IEC 61131-3", "the third part of IEC 61131 covering PLC programming languages",
      ["IEC_standards", "Programming_languages"], "Standard", "1993", ["Structured_text", "Ladder_logic"],
      extra_types=["yago:Language106282651"]),
    R("IEC_61499", "iec", "IEC 61499", "a standard for distributed control systems built from function blocks",
      ["IEC_standards", "Distributed_computing"], "Standard", "2005", ["IEC_61131"]),
    R("ISA-95", "standard", "ISA-95", "a standard for integrating enterprise and control systems",
      ["Industrial_automation", "Manufacturing_execution_system"], "Standard", "2000", ["B2MML", "Manufacturing_execution_system"],
      {"status": "Published"}),
    R("ISA-88", "standard", "ISA-88", "a standard addressing batch process control",
      ["Industrial_automation", "Batch_processing"], "Standard", "1995", ["Batch_processing"]),
    R("IO-Link", "bus", "IO-Link", "a short distance, bi-directional, digital, point-to-point communication interface for sensors",
      ["Industrial_computer_networks", "IEC_standards"], "Interface", "2008", ["Sensor"]),
    R("MQTT", "protocol", "MQTT", "a lightweight publish-subscribe messaging protocol",
      ["Application_layer_protocols", "Internet_of_things", "ISO_standards"], "Protocol", "1999",
      ["Publish-subscribe_pattern", "Internet_of_things"], {"developer": "dbr:IBM", "genre": "Messaging"}),
    R("Advanced_Message_Queuing_Protocol", "protocol", "Advanced Message Queuing Protocol",
      "an open standard application layer protocol for message-oriented middleware",
      ["Application_layer_protocols", "Message-oriented_middleware"], "Protocol", "2003", ["Message-oriented_middleware"]),
    R("Data_Distribution_Service", "protocol", "Data Distribution Service",
      "a middleware standard for data-centric publish-subscribe systems",
      ["Middleware", "Object_Management_Group_standards"], "Standard", "2004", ["Object_Management_Group"]),
    R("Constrained_Application_Protocol", "protocol", "Constrained Application Protocol",
      "a specialized web transfer protocol for constrained nodes", ["Application_layer_protocols", "Internet_of_things"],
      "Protocol", "2014", ["Internet_of_things"]),
    R("XMPP", "protocol", "XMPP", "an open communication protocol for message-oriented middleware based on XML",
      ["Application_layer_protocols", "Instant_messaging_protocols"], "Protocol", "1999"),
    R("Hypertext_Transfer_Protocol", "protocol", "Hypertext Transfer Protocol",
      "an application layer protocol for distributed hypermedia information systems",
      ["Application_layer_protocols", "World_Wide_Web"], "Protocol", "1991", ["World_Wide_Web"]),
    R("WebSocket", "protocol", "WebSocket", "a computer communications protocol providing full-duplex channels over TCP",
      ["Application_layer_protocols", "Web_technology"], "Protocol", "2011"),
    R("Devices_Profile_for_Web_Services", "protocol", "Devices Profile for Web Services",
      "a set of web service specifications for devices", ["Web_services", "Device_driver"], "Specification", "2004"),
    R("Time-Sensitive_Networking", "protocol", "Time-Sensitive Networking",
      "a set of IEEE 802.1 standards for deterministic Ethernet", ["Ethernet", "IEEE_802"], "Standard", "2012",
      ["IEEE_802.1Q", "Precision_Time_Protocol"]),
    R("IEEE_802.1Q", "standard", "IEEE 802.1Q", "the networking standard that supports virtual LANs", ["IEEE_802", "Ethernet"],
      "Standard", "1998"),
    R("IEEE_802.3", "standard", "IEEE 802.3", "a working group and collection of standards defining wired Ethernet",
      ["IEEE_802", "Ethernet"], "Standard", "1983"),
    R("IEEE_802.11", "wireless", "IEEE 802.11", "a set of media access control and physical layer specifications for wireless LANs",
      ["IEEE_802", "Wireless_networking"], "Standard", "1997"),
    R("IEEE_802.15.4", "wireless", "IEEE 802.15.4", "a technical standard defining low-rate wireless personal area networks",
      ["IEEE_802", "Wireless_networking"], "Standard", "2003", ["Zigbee", "6LoWPAN"]),
    R("Precision_Time_Protocol", "protocol", "Precision Time Protocol", "a protocol to synchronize clocks throughout a network",
      ["Network_time-related_software", "IEEE_standards"], "Protocol", "2002"),
    R("IEEE_1451", "standard", "IEEE 1451", "a set of smart transducer interface standards", ["IEEE_standards", "Sensors"],
      "Standard", "1997"),
    R("IPv6", "protocol", "IPv6", "the most recent version of the Internet Protocol", ["Internet_layer_protocols", "IPv6"],
      "Protocol", "1998"),
    R("6LoWPAN", "protocol", "6LoWPAN", "an adaptation layer carrying IPv6 over low-power wireless networks",
      ["Internet_of_things", "IPv6"], "Protocol", "2007", ["IEEE_802.15.4"]),
    R("Transport_Layer_Security", "protocol", "Transport Layer Security",
      "a cryptographic protocol designed to provide communications security", ["Cryptographic_protocols"], "Protocol", "1999"),
    R("Zigbee", "wireless", "Zigbee", "an IEEE 802.15.4-based specification for low-power personal area networks",
      ["Home_automation", "Wireless_networking"], "Specification", "2004", ["IEEE_802.15.4"]),
    R("Bluetooth", "wireless", "Bluetooth", "a short-range wireless technology standard", ["Wireless_networking", "Bluetooth"],
      "Standard", "1998"),
    R("LoRaWAN", "wireless", "LoRaWAN", "a low-power wide-area networking protocol", ["Internet_of_things", "Wireless_networking"],
      "Protocol", "2015"),
    R("Narrowband_IoT", "wireless", "Narrowband IoT", "a low-power wide-area network radio technology standard",
      ["Mobile_telecommunications_standards", "Internet_of_things"], "Standard", "2016"),
    R("5G", "wireless", "5G", "the fifth generation technology standard for cellular networks",
      ["Mobile_telecommunications_standards"], "Standard", "2019"),
    R("PROFIBUS", "bus", "PROFIBUS", "a standard for fieldbus communication in automation technology",
      ["Industrial_computer_networks", "Serial_buses"], "Fieldbus", "1989", ["PROFINET"]),
    R("PROFINET", "bus", "PROFINET", "an industry technical standard for data communication over Industrial Ethernet",
      ["Industrial_Ethernet", "Industrial_computer_networks"], "Standard", "2003", ["PROFIBUS", "Time-Sensitive_Networking"],
      {"developer": "dbr:PROFIBUS_and_PROFINET_International"}),
    R("PROFIsafe", "standard", "PROFIsafe", "a safety communication technology for distributed automation",
      ["Safety_engineering", "Industrial_computer_networks"], "Technology", "1999"),
    R("EtherCAT", "bus", "EtherCAT", "an Ethernet-based fieldbus system", ["Industrial_Ethernet"], "Fieldbus", "2003",
      {"developer": "dbr:Beckhoff_Automation"}),
    R("EtherNet/IP", "bus", "EtherNet/IP", "an industrial network protocol that adapts the Common Industrial Protocol to Ethernet",
      ["Industrial_Ethernet"], "Protocol", "2001", ["Common_Industrial_Protocol"]),
    R("Common_Industrial_Protocol", "protocol", "Common Industrial Protocol",
      "an industrial protocol for industrial automation applications", ["Industrial_computer_networks"], "Protocol"),
    R("DeviceNet", "bus", "DeviceNet", "a network protocol used in the automation industry", ["Industrial_computer_networks",
      "Serial_buses"], "Protocol", "1994"),
    R("CANopen", "bus", "CANopen", "a communication protocol and device profile specification for embedded systems",
      ["Industrial_computer_networks", "Serial_buses"], "Protocol", "1995"),
    R("Ethernet_Powerlink", "bus", "Ethernet Powerlink", "a real-time protocol for standard Ethernet",
      ["Industrial_Ethernet"], "Protocol", "2001"),
    R("CC-Link", "bus", "CC-Link", "an open industrial network family", ["Industrial_computer_networks"], "Network", "1996"),
    R("Modbus", "bus", "Modbus", "a data communications protocol originally published for programmable logic controllers",
      ["Industrial_computer_networks", "Serial_buses"], "Protocol", "1979"),
    R("Highway_Addressable_Remote_Transducer_Protocol", "protocol", "Highway Addressable Remote Transducer Protocol",
      "a hybrid analog and digital industrial automation protocol", ["Industrial_computer_networks"], "Protocol", "1986"),
    R("WirelessHART", "wireless", "WirelessHART", "a wireless sensor networking technology based on HART",
      ["Wireless_networking", "Industrial_computer_networks"], "Technology", "2007"),
    R("Foundation_Fieldbus", "bus", "Foundation Fieldbus", "an all-digital, serial, two-way communications system",
      ["Industrial_computer_networks", "Serial_buses"], "Fieldbus", "1994"),
    R("ISA100.11a", "wireless", "ISA100.11a", "a wireless networking technology standard for industrial automation",
      ["Wireless_networking", "Industrial_automation"], "Standard", "2009"),
    R("AS-Interface", "bus", "AS-Interface", "an industrial networking solution for connecting simple field devices",
      ["Industrial_computer_networks"], "Network", "1990"),
    R("Field_Device_Tool", "standard", "Field Device Tool", "an international standard for field device configuration interfaces",
      ["Industrial_automation", "IEC_standards"], "Standard", "2000"),
    R("Field_Device_Integration", "standard", "Field Device Integration", "a standard for integrating field devices in automation systems",
      ["Industrial_automation", "IEC_standards"], "Standard", "2011", ["OPC_Unified_Architecture"]),
    R("COLLADA", "format", "COLLADA", "an interchange file format for interactive 3D applications",
      ["XML-based_standards", "3D_graphics_file_formats"], "Format", "2004", extra_types=["yago:WikicatXML-basedStandards"]),
    R("B2MML", "xml", "B2MML", "an XML implementation of the ANSI/ISA-95 family of standards",
      ["XML-based_standards", "Manufacturing_execution_system"], "Implementation", "2003", ["ISA-95"]),
    R("PackML", "standard", "PackML", "an automation standard for packaging machines", ["Industrial_automation", "Packaging_machinery"],
      "Standard", "2008"),
    R("MTConnect", "protocol", "MTConnect", "a manufacturing technical standard to retrieve process information from machine tools",
      ["Machine_tools", "XML-based_standards"], "Standard", "2008"),
    R("ECLASS", "standard", "ECLASS", "a data standard for the classification of products and services",
      ["Classification_systems", "Product_data"], "Standard", "2000"),
    R("ISO_10303", "iso", "ISO 10303", "an ISO standard for the computer-interpretable representation of product data",
      ["ISO_standards", "CAD_file_formats"], "Standard", "1994"),
    R("STEP-NC", "iso", "STEP-NC", "a machine tool control language extending ISO 10303", ["ISO_standards", "Numerical_control"],
      "Language", "2003"),
    R("ISO_15926", "iso", "ISO 15926", "a standard for data integration of process plant life-cycle information",
      ["ISO_standards", "Process_engineering"], "Standard", "2003"),
    R("ISO_8000", "iso", "ISO 8000", "the international standard for data quality", ["ISO_standards", "Data_quality"], "Standard", "2009"),
    R("ISO_9001", "iso", "ISO 9001", "a standard for quality management systems", ["ISO_standards", "Quality_management"],
      "Standard", "1987"),
    R("ISO_14001", "iso", "ISO 14001", "a standard for environmental management systems", ["ISO_standards", "Environmental_management"],
      "Standard", "1996"),
    R("ISO_50001", "iso", "ISO 50001", "a standard for energy management systems", ["ISO_standards", "Energy_management"],
      "Standard", "2011"),
    R("IEC_61508", "iec", "IEC 61508", "an international standard for functional safety of electrical systems",
      ["IEC_standards", "Safety_engineering"], "Standard", "1998"),
    R("IEC_62061", "iec", "IEC 62061", "a standard for safety of machinery control systems", ["IEC_standards", "Safety_engineering"],
      "Standard", "2005"),
    R("ISO_13849", "iso", "ISO 13849", "a safety standard for machinery control systems", ["ISO_standards", "Safety_engineering"],
      "Standard", "1999"),
    R("IEC_62443", "iec", "IEC 62443", "a series of standards for industrial automation and control system security",
      ["IEC_standards", "Computer_security_standards"], "Standard", "2009"),
    R("ISO/IEC_27001", "iso", "ISO/IEC 27001", "an international standard for information security management",
      ["ISO_standards", "Computer_security_standards"], "Standard", "2005"),
    R("ISO/IEC_27002", "iso", "ISO/IEC 27002", "an information security standard of code of practice",
      ["ISO_standards", "Computer_security_standards"], "Standard", "2005"),
    R("X.509", "standard", "X.509", "a standard defining the format of public key certificates", ["Cryptography_standards"],
      "Standard", "1988"),
    R("OAuth", "standard", "OAuth", "an open standard for access delegation", ["Computer_access_control_protocols"],
      "Standard", "2007"),
    R("IEC_61850", "iec", "IEC 61850", "an international standard defining communication protocols for electrical substations",
      ["IEC_standards", "Electric_power"], "Standard", "2003"),
    R("IEC_60870-5", "iec", "IEC 60870-5", "a set of standards for telecontrol in electrical engineering",
      ["IEC_standards", "Electric_power"], "Standard", "1990"),
    R("IEC_62056", "iec", "IEC 62056", "a set of standards for electricity metering data exchange", ["IEC_standards", "Metering"],
      "Standard", "2002"),
    R("OpenADR", "standard", "OpenADR", "an open and standardized way for electricity providers to communicate demand response signals",
      ["Smart_grid"], "Standard", "2010"),
    R("BACnet", "protocol", "BACnet", "a communication protocol for building automation and control networks",
      ["Building_automation", "ISO_standards"], "Protocol", "1995"),
    R("LonWorks", "bus", "LonWorks", "a networking platform for control applications", ["Building_automation"], "Platform", "1999"),
    R("Electronic_Product_Code", "standard", "Electronic Product Code", "a universal identifier for physical objects",
      ["Identifiers", "Radio-frequency_identification"], "Identifier", "1999"),
    R("Global_Trade_Item_Number", "standard", "Global Trade Item Number", "an identifier for trade items developed by GS1",
      ["Identifiers", "Barcodes"], "Identifier", "1974"),
    R("Data_Matrix", "format", "Data Matrix", "a two-dimensional code consisting of black and white cells",
      ["Barcodes", "ISO_standards"], "Barcode", "1987"),
    R("QR_code", "format", "QR code", "a type of matrix barcode", ["Barcodes"], "Barcode", "1994"),
    R("SCOR", "scor", "SCOR", "a process reference model for supply chain management",
      ["Supply_chain_management", "Business_process_management"], "Model", "1996"),
    R("EDIFACT", "standard", "EDIFACT", "an international standard for electronic data interchange", ["Electronic_data_interchange"],
      "Standard", "1987"),
    R("EbXML", "xml", "EbXML", "a family of XML based standards for electronic business", ["XML-based_standards"], "Standard", "1999"),
    R("RosettaNet", "standard", "RosettaNet", "a consortium standard for business-to-business processes",
      ["Electronic_data_interchange"], "Standard", "1998"),
    R("Business_Process_Model_and_Notation", "language", "Business Process Model and Notation",
      "a graphical representation for specifying business processes", ["Specification_languages", "Object_Management_Group_standards"],
      "Notation", "2004"),
    R("Unified_Modeling_Language", "language", "Unified Modeling Language",
      "a general-purpose modeling language in software engineering", ["Specification_languages", "Object_Management_Group_standards"],
      "Language", "1997"),
    R("Systems_Modeling_Language", "language", "Systems Modeling Language", "a general-purpose modeling language for systems engineering",
      ["Specification_languages", "Systems_engineering"], "Language", "2007"),
    R("XML_Metadata_Interchange", "xml", "XML Metadata Interchange", "an OMG standard for exchanging metadata via XML",
      ["XML-based_standards", "Object_Management_Group_standards"], "Standard", "2000"),
    R("Modelica", "language", "Modelica", "an object-oriented, declarative, multi-domain modeling language",
      ["Simulation_programming_languages"], "Language", "1997"),
    R("Functional_Mock-up_Interface", "standard", "Functional Mock-up Interface", "a free standard for exchanging dynamic simulation models",
      ["Simulation_software"], "Standard", "2010"),
    R("XML", "xml", "XML", "a markup language and file format for storing and transmitting data",
      ["XML", "World_Wide_Web_Consortium_standards"], "Language", "1998", extra_types=["yago:WikicatW3CStandards"]),
    R("JSON", "format", "JSON", "an open standard file format and data interchange format", ["Data_serialization_formats"],
      "Format", "2001"),
    R("Resource_Description_Framework", "semweb", "Resource Description Framework",
      "a World Wide Web Consortium standard for describing web resources", ["Semantic_Web", "World_Wide_Web_Consortium_standards"],
      "Model", "1999"),
    R("Web_Ontology_Language", "semweb", "Web Ontology Language", "a family of knowledge representation languages for ontologies",
      ["Semantic_Web", "Knowledge_representation_languages"], "Language", "2004"),
    R("SPARQL", "semweb", "SPARQL", "an RDF query language", ["Semantic_Web", "Query_languages"], "Language", "2008"),
    R("SensorML", "xml", "SensorML", "an XML encoding for describing sensors and measurement processes",
      ["XML-based_standards", "Open_Geospatial_Consortium"], "Standard", "2007"),
    # organizations
    R("International_Electrotechnical_Commission", "org", "International Electrotechnical Commission",
      "an international standards organization for electrical and electronic technologies", ["Standards_organizations",
      "International_organizations"], "Organization", "1906"),
    R("International_Organization_for_Standardization", "org", "International Organization for Standardization",
      "an international standard-setting body", ["Standards_organizations", "International_organizations"], "Body", "1947"),
    R("Institute_of_Electrical_and_Electronics_Engineers", "org", "Institute of Electrical and Electronics Engineers",
      "a professional association for electronic and electrical engineering", ["Standards_organizations",
      "Engineering_societies"], "Association", "1963"),
    R("World_Wide_Web_Consortium", "org", "World Wide Web Consortium", "the main international standards organization for the web",
      ["Standards_organizations", "World_Wide_Web"], "Organization", "1994"),
    R("Internet_Engineering_Task_Force", "org", "Internet Engineering Task Force",
      "an open standards organization developing Internet standards", ["Standards_organizations", "Internet_governance"],
      "Organization", "1986"),
    R("OPC_Foundation", "org", "OPC Foundation", "an industry consortium that maintains OPC standards",
      ["Standards_organizations", "Industrial_automation"], "Consortium", "1996"),
    R("International_Society_of_Automation", "org", "International Society of Automation",
      "a non-profit technical society for engineers and technicians in automation", ["Standards_organizations",
      "Engineering_societies"], "Society", "1945"),
    R("Manufacturing_Enterprise_Solutions_Association", "org", "Manufacturing Enterprise Solutions Association",
      "a global community focused on manufacturing operations", ["Manufacturing"], "Association", "1992"),
    R("NAMUR", "city", "Namur", "a city and municipality in Wallonia, Belgium", ["Cities_in_Wallonia"], "City"),
    R("ZVEI", "org", "ZVEI", "the German electrical and electronic manufacturers association", ["Trade_associations_based_in_Germany"],
      "Association", "1918"),
    R("German_Institute_for_Standardization", "org", "German Institute for Standardization",
      "the German national organization for standardization", ["Standards_organizations", "Organisations_based_in_Berlin"],
      "Organization", "1917"),
    R("ODVA", "org", "ODVA", "a global association of automation companies", ["Standards_organizations"], "Association", "1995"),
    R("CAN_in_Automation", "org", "CAN in Automation", "an international users and manufacturers group for CAN",
      ["Standards_organizations"], "Group", "1992"),
    R("FieldComm_Group", "org", "FieldComm Group", "a standards organization for process automation communication",
      ["Standards_organizations"], "Organization", "2014"),
    R("PLCopen", "org", "PLCopen", "an independent organization for industrial control programming", ["Standards_organizations"],
      "Organization", "1992"),
    R("Organization_for_the_Advancement_of_Structured_Information_Standards", "org",
      "Organization for the Advancement of Structured Information Standards", "a nonprofit consortium for open standards",
      ["Standards_organizations", "XML_organizations"], "Consortium", "1993"),
    R("Object_Management_Group", "org", "Object Management Group", "a computer industry standards consortium",
      ["Standards_organizations"], "Consortium", "1989"),
    R("Open_Geospatial_Consortium", "org", "Open Geospatial Consortium", "an international voluntary consensus standards organization",
      ["Standards_organizations", "Geographic_information_systems"], "Organization", "1994"),
    R("Bluetooth_Special_Interest_Group", "org", "Bluetooth Special Interest Group",
      "the standards organization that oversees Bluetooth", ["Standards_organizations"], "Group", "1998"),
    R("Connectivity_Standards_Alliance", "org", "Connectivity Standards Alliance", "a group of companies maintaining the Zigbee standard",
      ["Standards_organizations", "Home_automation"], "Alliance", "2002"),
    R("LoRa_Alliance", "org", "LoRa Alliance", "an association promoting the LoRaWAN protocol", ["Standards_organizations"],
      "Alliance", "2015"),
    R("3rd_Generation_Partnership_Project", "org", "3rd Generation Partnership Project",
      "an umbrella term for standards organizations developing mobile telecommunication protocols",
      ["Standards_organizations", "Mobile_telecommunications"], "Project", "1998"),
    R("Industrial_Internet_Consortium", "org", "Industrial Internet Consortium", "a program of the Object Management Group",
      ["Industrial_Internet_of_things"], "Consortium", "2014"),
    R("Association_for_Supply_Chain_Management", "org", "Association for Supply Chain Management",
      "a professional association for supply chain management", ["Supply_chain_management"], "Association", "1957"),
    R("GS1", "org", "GS1", "a not-for-profit organization that develops and maintains global standards for business communication",
      ["Standards_organizations", "Identifiers"], "Organization", "1974"),
    R("ASHRAE", "org", "ASHRAE", "a professional association for heating, ventilation and air conditioning",
      ["Engineering_societies", "Building_automation"], "Association", "1894"),
    R("KNX_Association", "org", "KNX Association", "the association behind the KNX building automation standard",
      ["Building_automation"], "Association", "1999"),
]

# articles known before interlinking (collected during population)
WIKIPEDIA_ARTICLES = [
    ("IEC_61131", "IEC_61131"), ("AML", "AutomationML"), ("MQTT", "MQTT"), ("PROFINET", "PROFINET"),
    ("ISO_10303", "ISO_10303"), ("IEC_61499", "IEC_61499"), ("SCOR", "Supply_chain_operations_reference"),
]

# aggregate gold: totals as published; tp = round(precision x total)
_SRC = "aggregate published count; tp reconstructed from the reported precision"
GOLD_SUMMARY = [
    ("relation", "", 266, 188, 78, "aggregate published count; tp and total as published"),
    ("class_linking", "std", 93, 61, 32, _SRC),
    ("class_linking", "org", 108, 97, 11, _SRC),
    ("property_value", "std", 35, 34, 1, _SRC),
    ("property_value", "org", 39, 37, 2, _SRC),
    ("sameas", "std", 301, 295, 6, _SRC),
    ("sameas", "org", 217, 197, 20, _SRC),
    ("subject_value", "std", 144, 141, 3, _SRC),
    ("subject_value", "org", 115, 110, 5, _SRC),
    ("hypernym", "std", 44, 27, 17, _SRC),
    ("hypernym", "org", 36, 31, 5, _SRC),
]

STO = "https://w3id.org/i40/sto#"
DBR = "http://dbpedia.org/resource/"
YAGO = "http://dbpedia.org/class/yago/"
DBO = "http://dbpedia.org/ontology/"

GOLD_DEMO = [
    ("relation", STO + "AML", STO + "IEC_61499", "true", "AutomationML models IEC 61499 control applications"),
    ("relation", STO + "IEC_61131", STO + "IEC_62541", "true", "PLCopen OPC UA information model for IEC 61131-3"),
    ("relation", STO + "IEC_61850", STO + "IEC_62541", "true", "IEC 62541-100 maps IEC 61850 onto OPC UA"),
    ("relation", STO + "AML", STO + "IEC_62541", "true", "AutomationML and OPC UA companion specification"),
    ("relation", STO + "IEC_62541", STO + "PROFINET", "true", "OPC UA over TSN alongside PROFINET"),
    ("relation", STO + "COLLADA", STO + "IEC_61499", "false", "no shared scope in the standards texts"),
    ("relation", STO + "IEC_61970", STO + "PackML", "false", "grid models and packaging states do not interact"),
    ("relation", STO + "IEC_61968", STO + "IO_Link", "false", "no shared scope in the standards texts"),
    ("class_linking", STO + "Standard", YAGO + "Model105890249", "true", "reference models are standards artefacts"),
    ("class_linking", STO + "Standard", DBO + "Person", "false", "a standard is not a person"),
    ("class_linking", STO + "StandardOrganization", DBO + "Place", "false", "an organization is not a place"),
    ("class_linking", STO + "StandardOrganization", DBO + "Organisation", "true", "standards bodies are organisations"),
    ("class_linking", STO + "Standard", YAGO + "WikicatIndustry-specificXML-basedStandards", "true", "XML based standards"),
    ("class_linking", STO + "Standard", YAGO + "Standard107260623", "true", "standard synset"),
    ("property_value", STO + "Standard", DBO + "yearStarted", "true", "first publication year"),
    ("property_value", STO + "Standard", "http://purl.org/dc/terms/subject", "true", "topic categories"),
    ("hypernym", STO + "B2MML", DBR + "Implementation", "true", "B2MML implements ISA-95"),
    ("hypernym", STO + "IEC_62541", DBR + "Protocol", "true", "OPC UA is a protocol"),
    ("hypernym", STO + "SCOR", DBR + "Model", "true", "SCOR is a model"),
]
