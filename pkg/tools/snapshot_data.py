"""Source tables for the bundled knowledge-graph snapshot.

Each standard row: id | label | tags (;) | publisher | layers (;) | domain
Relations: subject predicate object, one per line, using local ids.
"""

ORGANIZATIONS = """
IEC | International Electrotechnical Commission | IEC | 1906 | https://www.iec.ch
ISO | International Organization for Standardization | ISO | 1947 | https://www.iso.org
ISO_IEC_JTC1 | ISO/IEC Joint Technical Committee 1 | JTC 1 | 1987 | https://jtc1info.org
IEEE | Institute of Electrical and Electronics Engineers | IEEE | 1963 | https://www.ieee.org
W3C | World Wide Web Consortium | W3C | 1994 | https://www.w3.org
IETF | Internet Engineering Task Force | IETF | 1986 | https://www.ietf.org
OPC_Foundation | OPC Foundation | OPCF | 1996 | https://opcfoundation.org
AutomationML_eV | AutomationML e.V. | AutomationML association | 2009 | https://www.automationml.org
ISA | International Society of Automation | ISA | 1945 | https://www.isa.org
MESA | Manufacturing Enterprise Solutions Association | MESA | 1992 | https://www.mesa.org
NAMUR | NAMUR | User Association of Automation Technology in Process Industries | 1949 | https://www.namur.net
VDI | Association of German Engineers | VDI | 1856 | https://www.vdi.de
VDMA | Mechanical Engineering Industry Association | VDMA | 1892 | https://www.vdma.org
ZVEI | ZVEI | German Electrical and Electronic Manufacturers Association | 1918 | https://www.zvei.org
DIN | German Institute for Standardization | DIN | 1917 | https://www.din.de
DKE | German Commission for Electrical, Electronic and Information Technologies | DKE | 1970 | https://www.dke.de
PI | PROFIBUS and PROFINET International | PI | 1995 | https://www.profibus.com
ETG | EtherCAT Technology Group | ETG | 2003 | https://www.ethercat.org
ODVA | ODVA | Open DeviceNet Vendors Association | 1995 | https://www.odva.org
CiA | CAN in Automation | CiA | 1992 | https://www.can-cia.org
FieldComm_Group | FieldComm Group | FCG | 2014 | https://www.fieldcommgroup.org
PLCopen | PLCopen | PLCopen organization | 1992 | https://plcopen.org
OMAC | Organization for Machine Automation and Control | OMAC | 1994 | https://www.omac.org
MTConnect_Institute | MTConnect Institute | MTConnect Institute | 2010 | https://www.mtconnect.org
eCLASS_eV | ECLASS e.V. | eCl@ss association | 2000 | https://eclass.eu
GS1 | GS1 | Global Standards One | 1974 | https://www.gs1.org
OASIS | Organization for the Advancement of Structured Information Standards | OASIS | 1993 | https://www.oasis-open.org
OMG | Object Management Group | OMG | 1989 | https://www.omg.org
OGC | Open Geospatial Consortium | OGC | 1994 | https://www.ogc.org
Bluetooth_SIG | Bluetooth Special Interest Group | Bluetooth SIG | 1998 | https://www.bluetooth.com
CSA | Connectivity Standards Alliance | Zigbee Alliance | 2002 | https://csa-iot.org
LoRa_Alliance | LoRa Alliance | LoRa Alliance | 2015 | https://lora-alliance.org
3GPP | 3rd Generation Partnership Project | 3GPP | 1998 | https://www.3gpp.org
oneM2M_Partnership | oneM2M Partnership Project | oneM2M | 2012 | https://www.onem2m.org
IIC | Industrial Internet Consortium | IIC | 2014 | https://www.iiconsortium.org
Plattform_I40 | Plattform Industrie 4.0 | Plattform Industrie 4.0 | 2013 | https://www.plattform-i40.de
ASCM | Association for Supply Chain Management | APICS | 1957 | https://www.ascm.org
MIMOSA | MIMOSA | Machinery Information Management Open Systems Alliance | 1994 | https://www.mimosa.org
OAGi | Open Applications Group | OAGi | 1995 | https://oagi.org
Modbus_Organization | Modbus Organization | Modbus-IDA | 2002 | https://modbus.org
ASHRAE | American Society of Heating, Refrigerating and Air-Conditioning Engineers | ASHRAE | 1894 | https://www.ashrae.org
KNX_Association | KNX Association | KNX | 1999 | https://www.knx.org
"""

FRAMEWORKS = {
    "RAMI40": ("Reference Architecture Model Industrie 4.0", "IT layers", [
        ("rami:Asset", "Asset"), ("rami:Integration", "Integration"), ("rami:Communication", "Communication"),
        ("rami:Information", "Information"), ("rami:Functional", "Functional"), ("rami:Business", "Business"),
    ]),
    "AdministrationShell": ("Asset Administration Shell", "Submodels", [
        ("sto:IdentificationSubmodel", "Identification"), ("sto:CommunicationSubmodel", "Communication"),
        ("sto:EngineeringSubmodel", "Engineering"), ("sto:ConfigurationSubmodel", "Configuration"),
        ("sto:SafetySubmodel", "Safety"), ("sto:SecuritySubmodel", "Security"),
        ("sto:LifeCycleStatusSubmodel", "Life cycle status"), ("sto:EnergyEfficiencySubmodel", "Energy efficiency"),
    ]),
    "IICF": ("Industrial Internet Connectivity Framework", "Connectivity levels", [
        ("sto:PhysicalLevel", "Physical"), ("sto:LinkLevel", "Link"), ("sto:NetworkLevel", "Network"),
        ("sto:TransportLevel", "Transport"), ("sto:FrameworkLevel", "Framework"),
        ("sto:DistributedDataLevel", "Distributed data interoperability and management"),
    ]),
    "NIST_SMS": ("Standards Landscape for Smart Manufacturing Systems", "Life cycles and pyramid levels", [
        ("sto:ProductLifecycle", "Product life cycle"), ("sto:ProductionSystemLifecycle", "Production system life cycle"),
        ("sto:SupplyChainCycle", "Business cycle"), ("sto:DeviceLevel", "Level 0-1 device"),
        ("sto:ControlLevel", "Level 2 control"), ("sto:OperationsLevel", "Level 3 manufacturing operations"),
        ("sto:EnterpriseLevel", "Level 4 enterprise"),
    ]),
    "NSMSA": ("National Smart Manufacturing Standards Architecture", "Smart functions and hierarchy", [
        ("sto:ResourceElements", "Resource elements"), ("sto:SystemIntegration", "System integration"),
        ("sto:Interconnect", "Interconnect"), ("sto:InformationConvergence", "Information convergence"),
        ("sto:NewBusinessModels", "New business models"), ("sto:EquipmentHierarchy", "Equipment"),
        ("sto:FieldHierarchy", "Field"), ("sto:WorkshopHierarchy", "Workshop"),
        ("sto:EnterpriseHierarchy", "Enterprise"), ("sto:CollaborationHierarchy", "Collaboration"),
    ]),
}

# aligned layers across frameworks (framework a, layer a, framework b, layer b)
ALIGNMENT = [
    ("RAMI40", "rami:Communication", "IICF", "sto:TransportLevel"),
    ("RAMI40", "rami:Communication", "AdministrationShell", "sto:CommunicationSubmodel"),
    ("RAMI40", "rami:Communication", "NSMSA", "sto:Interconnect"),
    ("RAMI40", "rami:Information", "IICF", "sto:DistributedDataLevel"),
    ("RAMI40", "rami:Information", "NSMSA", "sto:InformationConvergence"),
    ("RAMI40", "rami:Integration", "NSMSA", "sto:SystemIntegration"),
    ("RAMI40", "rami:Integration", "AdministrationShell", "sto:IdentificationSubmodel"),
    ("RAMI40", "rami:Asset", "NIST_SMS", "sto:DeviceLevel"),
    ("RAMI40", "rami:Asset", "NSMSA", "sto:ResourceElements"),
    ("RAMI40", "rami:Functional", "NIST_SMS", "sto:OperationsLevel"),
    ("RAMI40", "rami:Business", "NIST_SMS", "sto:SupplyChainCycle"),
    ("RAMI40", "rami:Business", "NSMSA", "sto:NewBusinessModels"),
    ("IICF", "sto:PhysicalLevel", "NIST_SMS", "sto:DeviceLevel"),
    ("IICF", "sto:LinkLevel", "NSMSA", "sto:Interconnect"),
    ("NIST_SMS", "sto:EnterpriseLevel", "NSMSA", "sto:EnterpriseHierarchy"),
    ("NIST_SMS", "sto:ControlLevel", "NSMSA", "sto:FieldHierarchy"),
]

DOMAINS = [
    "M2MCommunication", "IndustrialNetworking", "Automation", "Engineering", "ProductData", "EnterpriseIntegration",
    "FunctionalSafety", "Security", "Energy", "IoT", "Identification", "ConditionMonitoring", "Semantics",
    "QualityManagement", "SupplyChain", "DeviceIntegration", "BuildingAutomation", "Robotics",
]

LICENSES = {
    "GPLv2": "GNU General Public License v2",
    "RoyaltyFree": "Royalty-free specification",
    "PaidSpecification": "Purchase required",
    "W3CSoftwareLicense": "W3C Software and Document License",
    "RFCLicense": "IETF Trust Legal Provisions",
}

STANDARDS = """
OPC_UA | OPC UA | OPC UA;OPC Unified Architecture | OPC_Foundation | rami:Communication;sto:FrameworkLevel | M2MCommunication
IEC_62541 | IEC 62541 | IEC 62541;OPC UA series | IEC | rami:Communication;sto:CommunicationSubmodel;sto:FieldHierarchy | M2MCommunication
AML | AML | AML;AutomationML | AutomationML_eV | rami:Information;sto:EngineeringSubmodel | Engineering
IEC_62714 | IEC 62714 | IEC 62714;Engineering data exchange format | IEC | rami:Information;sto:ProductionSystemLifecycle | Engineering
IEC_62424 | IEC 62424 | IEC 62424;CAEX | IEC | rami:Information | Engineering
IEC_61131 | IEC 61131 | IEC 61131;PLC programming | IEC | rami:Integration;sto:ControlLevel | Automation
IEC_61131_3 | IEC 61131-3 | IEC 61131-3;Structured Text | IEC | rami:Functional;sto:ControlLevel | Automation
IO_Link | IO-Link | IO-Link;Single-drop digital communication interface | PI | rami:Integration;rami:Communication;sto:DeviceLevel | IndustrialNetworking
IEC_61131_9 | IEC 61131-9 | IEC 61131-9;SDCI | IEC | rami:Communication | IndustrialNetworking
IEC_61499 | IEC 61499 | IEC 61499;Function blocks | IEC | rami:Functional;sto:ControlLevel | Automation
PLCopen_XML | PLCopen XML | PLCopen XML;TC6 XML | PLCopen | rami:Information | Automation
PLCopen_Motion | PLCopen Motion Control | PLCopen Motion Control;Motion function blocks | PLCopen | rami:Functional | Automation
COLLADA | COLLADA | COLLADA;Collaborative Design Activity | OASIS | rami:Information | Engineering
ISA_95 | ISA-95 | ISA-95;ANSI/ISA-95 | ISA | rami:Functional;sto:OperationsLevel;sto:EnterpriseLevel | EnterpriseIntegration
IEC_62264 | IEC 62264 | IEC 62264;Enterprise-control system integration | IEC | rami:Functional;rami:Business;sto:OperationsLevel;sto:WorkshopHierarchy | EnterpriseIntegration
ISA_88 | ISA-88 | ISA-88;Batch control | ISA | rami:Functional;sto:ControlLevel | Automation
IEC_61512 | IEC 61512 | IEC 61512;Batch control models | IEC | rami:Functional;sto:OperationsLevel | Automation
B2MML | B2MML | B2MML;Business To Manufacturing Markup Language | MESA | rami:Business;sto:OperationsLevel | EnterpriseIntegration
BatchML | BatchML | BatchML;Batch Markup Language | MESA | rami:Information;sto:OperationsLevel | EnterpriseIntegration
OAGIS | OAGIS | OAGIS;Open Applications Group Integration Specification | OAGi | rami:Business;sto:SupplyChainCycle | EnterpriseIntegration
ISA_101 | ISA-101 | ISA-101;HMI design | ISA | rami:Functional | Automation
ISA_18_2 | ISA-18.2 | ISA-18.2;Alarm management | ISA | rami:Functional;sto:ControlLevel | Automation
PackML | PackML | PackML;ISA-TR88.00.02 | OMAC | rami:Functional;sto:ControlLevel | Automation
MTConnect | MTConnect | MTConnect;ANSI/MTC1.4 | MTConnect_Institute | rami:Communication;rami:Information;sto:OperationsLevel | M2MCommunication
MQTT | MQTT | MQTT;Message Queuing Telemetry Transport | OASIS | rami:Communication;sto:TransportLevel;sto:Interconnect | M2MCommunication
ISO_20922 | ISO/IEC 20922 | ISO/IEC 20922;ISO 20922 | ISO_IEC_JTC1 | rami:Communication;sto:TransportLevel | M2MCommunication
AMQP | AMQP | AMQP;Advanced Message Queuing Protocol | OASIS | rami:Communication;sto:TransportLevel | M2MCommunication
ISO_IEC_19464 | ISO/IEC 19464 | ISO/IEC 19464;AMQP 1.0 | ISO_IEC_JTC1 | rami:Communication | M2MCommunication
DDS | DDS | DDS;Data Distribution Service | OMG | rami:Communication;sto:FrameworkLevel | M2MCommunication
DDSI_RTPS | DDSI-RTPS | DDSI-RTPS;Real-Time Publish Subscribe wire protocol | OMG | sto:TransportLevel | M2MCommunication
CoAP | CoAP | CoAP;Constrained Application Protocol;RFC 7252 | IETF | rami:Communication;sto:TransportLevel | IoT
XMPP | XMPP | XMPP;RFC 6120 | IETF | rami:Communication;sto:TransportLevel | M2MCommunication
HTTP | HTTP | HTTP;Hypertext Transfer Protocol | IETF | rami:Communication;sto:TransportLevel | M2MCommunication
WebSocket | WebSocket | WebSocket;RFC 6455 | IETF | sto:TransportLevel | M2MCommunication
LwM2M | LwM2M | LwM2M;Lightweight M2M | OMG | rami:Communication;sto:FrameworkLevel | IoT
oneM2M | oneM2M | oneM2M;oneM2M TS-0001 | oneM2M_Partnership | rami:Communication;sto:FrameworkLevel | IoT
DPWS | DPWS | DPWS;Devices Profile for Web Services | OASIS | rami:Communication;sto:FrameworkLevel | IoT
TSN | TSN | TSN;Time-Sensitive Networking | IEEE | rami:Communication;sto:LinkLevel | IndustrialNetworking
IEEE_802_1Q | IEEE 802.1Q | IEEE 802.1Q;VLAN bridging | IEEE | sto:LinkLevel | IndustrialNetworking
IEEE_802_3 | IEEE 802.3 | IEEE 802.3;Ethernet | IEEE | rami:Communication;sto:LinkLevel;sto:PhysicalLevel | IndustrialNetworking
IEEE_802_11 | IEEE 802.11 | IEEE 802.11;Wi-Fi | IEEE | sto:LinkLevel;sto:PhysicalLevel | IndustrialNetworking
IEEE_802_15_4 | IEEE 802.15.4 | IEEE 802.15.4;Low-rate wireless PAN | IEEE | sto:LinkLevel;sto:PhysicalLevel | IoT
IEEE_1588 | IEEE 1588 | IEEE 1588;Precision Time Protocol | IEEE | rami:Communication;sto:NetworkLevel | IndustrialNetworking
IEEE_1451 | IEEE 1451 | IEEE 1451;Smart transducer interface | IEEE | rami:Asset;sto:DeviceLevel | IoT
IEEE_2030_5 | IEEE 2030.5 | IEEE 2030.5;Smart Energy Profile 2.0 | IEEE | rami:Communication | Energy
IPv6 | IPv6 | IPv6;RFC 8200 | IETF | sto:NetworkLevel | IndustrialNetworking
6LoWPAN | 6LoWPAN | 6LoWPAN;RFC 4944 | IETF | sto:NetworkLevel | IoT
TLS | TLS | TLS;Transport Layer Security;RFC 8446 | IETF | rami:Communication | Security
Zigbee | Zigbee | Zigbee;Zigbee PRO | CSA | sto:NetworkLevel;sto:Interconnect | IoT
Bluetooth | Bluetooth | Bluetooth;Bluetooth Low Energy | Bluetooth_SIG | sto:LinkLevel;sto:PhysicalLevel | IoT
LoRaWAN | LoRaWAN | LoRaWAN;Long Range Wide Area Network | LoRa_Alliance | sto:LinkLevel | IoT
NB_IoT | NB-IoT | NB-IoT;Narrowband IoT | 3GPP | sto:LinkLevel;sto:PhysicalLevel | IoT
5G | 5G | 5G;IMT-2020 | 3GPP | rami:Communication;sto:PhysicalLevel | IoT
Thread | Thread | Thread;Thread networking protocol | CSA | sto:NetworkLevel | IoT
IEC_61158 | IEC 61158 | IEC 61158;Fieldbus | IEC | rami:Communication;sto:LinkLevel;sto:DeviceLevel | IndustrialNetworking
IEC_61784 | IEC 61784 | IEC 61784;Fieldbus profiles | IEC | rami:Communication;sto:CommunicationSubmodel | IndustrialNetworking
IEC_61784_3 | IEC 61784-3 | IEC 61784-3;Functional safety fieldbuses | IEC | rami:Communication;sto:SafetySubmodel | FunctionalSafety
PROFIBUS | PROFIBUS | PROFIBUS;Process Field Bus | PI | rami:Communication;sto:DeviceLevel | IndustrialNetworking
PROFINET | PROFINET | PROFINET;Process Field Net | PI | rami:Communication;sto:LinkLevel;sto:DeviceLevel | IndustrialNetworking
PROFIsafe | PROFIsafe | PROFIsafe;Safety profile | PI | sto:SafetySubmodel | FunctionalSafety
PROFIenergy | PROFIenergy | PROFIenergy;Energy profile | PI | sto:EnergyEfficiencySubmodel | Energy
EtherCAT | EtherCAT | EtherCAT;Ethernet for Control Automation Technology | ETG | rami:Communication;sto:LinkLevel | IndustrialNetworking
EtherNet_IP | EtherNet/IP | EtherNet/IP;Ethernet Industrial Protocol | ODVA | rami:Communication;sto:TransportLevel | IndustrialNetworking
CIP | CIP | CIP;Common Industrial Protocol | ODVA | rami:Communication | IndustrialNetworking
DeviceNet | DeviceNet | DeviceNet;CIP on CAN | ODVA | rami:Communication;sto:DeviceLevel | IndustrialNetworking
CANopen | CANopen | CANopen;EN 50325-4 | CiA | rami:Communication;sto:DeviceLevel | IndustrialNetworking
ISO_11898 | ISO 11898 | ISO 11898;Controller Area Network | ISO | sto:LinkLevel;sto:PhysicalLevel | IndustrialNetworking
SERCOS | SERCOS | SERCOS;SERCOS III | IEC | rami:Communication | IndustrialNetworking
POWERLINK | Ethernet POWERLINK | Ethernet POWERLINK;EPL | IEC | rami:Communication | IndustrialNetworking
CC_Link | CC-Link | CC-Link;CC-Link IE | IEC | rami:Communication | IndustrialNetworking
Modbus | Modbus | Modbus;Modbus TCP | Modbus_Organization | rami:Communication;sto:DeviceLevel | IndustrialNetworking
HART | HART | HART;Highway Addressable Remote Transducer | FieldComm_Group | rami:Communication;sto:DeviceLevel | DeviceIntegration
WirelessHART | WirelessHART | WirelessHART;IEC 62591 | FieldComm_Group | rami:Communication;sto:LinkLevel | DeviceIntegration
Foundation_Fieldbus | Foundation Fieldbus | Foundation Fieldbus;FF H1 | FieldComm_Group | rami:Communication;sto:DeviceLevel | DeviceIntegration
ISA100_11a | ISA100.11a | ISA100.11a;IEC 62734 | ISA | sto:LinkLevel | DeviceIntegration
AS_Interface | AS-Interface | AS-Interface;AS-i | IEC | rami:Communication;sto:DeviceLevel | IndustrialNetworking
IEC_62439 | IEC 62439 | IEC 62439;High availability automation networks | IEC | sto:NetworkLevel | IndustrialNetworking
IEC_61804 | IEC 61804 | IEC 61804;EDDL | IEC | rami:Integration;sto:ConfigurationSubmodel | DeviceIntegration
FDI | FDI | FDI;Field Device Integration;IEC 62769 | FieldComm_Group | rami:Integration;sto:ConfigurationSubmodel | DeviceIntegration
FDT | FDT | FDT;Field Device Tool;IEC 62453 | IEC | rami:Integration;sto:ConfigurationSubmodel | DeviceIntegration
NAMUR_NE_107 | NAMUR NE 107 | NAMUR NE 107;Self-monitoring and diagnosis | NAMUR | rami:Functional | ConditionMonitoring
NAMUR_NOA | NAMUR Open Architecture | NAMUR Open Architecture;NOA | NAMUR | rami:Information | Automation
MTP | Module Type Package | Module Type Package;VDI/VDE/NAMUR 2658 | NAMUR | rami:Integration | Automation
VDI_2193 | VDI 2193 | VDI 2193;Language for I4.0 components | VDI | rami:Communication | M2MCommunication
VDI_5600 | VDI 5600 | VDI 5600;Manufacturing execution systems | VDI | rami:Functional;sto:OperationsLevel | EnterpriseIntegration
VDI_3682 | VDI 3682 | VDI 3682;Formalised process descriptions | VDI | rami:Information | Engineering
VDI_2206 | VDI 2206 | VDI 2206;Design of mechatronic systems | VDI | sto:ProductLifecycle | Engineering
VDI_4499 | VDI 4499 | VDI 4499;Digital factory | VDI | sto:ProductionSystemLifecycle | Engineering
IEC_62832 | IEC 62832 | IEC 62832;Digital Factory framework | IEC | rami:Information;sto:ProductionSystemLifecycle | Engineering
IEC_62890 | IEC 62890 | IEC 62890;Life-cycle management for systems and products | IEC | sto:LifeCycleStatusSubmodel;sto:ProductLifecycle | Engineering
DIN_SPEC_91345 | DIN SPEC 91345 | DIN SPEC 91345;RAMI4.0 specification | DIN | rami:Business | Engineering
IEC_PAS_63088 | IEC PAS 63088 | IEC PAS 63088;RAMI4.0 PAS | IEC | rami:Business | Engineering
eCl_ss | eCl@ss | eCl@ss;ECLASS | eCLASS_eV | rami:Information;sto:EngineeringSubmodel | Semantics
IEC_61360 | IEC 61360 | IEC 61360;Common data dictionary | IEC | rami:Information;sto:EngineeringSubmodel | Semantics
IEC_61987 | IEC 61987 | IEC 61987;Process equipment data structures | IEC | rami:Information;sto:EngineeringSubmodel | Semantics
ISO_13584 | ISO 13584 | ISO 13584;PLIB | ISO | rami:Information | Semantics
UNSPSC | UNSPSC | UNSPSC;United Nations Standard Products and Services Code | GS1 | rami:Business | Semantics
ISO_10303 | ISO 10303 | ISO 10303;STEP | ISO | rami:Information;sto:ProductLifecycle | ProductData
ISO_10303_AP242 | ISO 10303-242 | ISO 10303-242;STEP AP242 | ISO | sto:ProductLifecycle | ProductData
ISO_14649 | ISO 14649 | ISO 14649;STEP-NC | ISO | sto:ProductLifecycle;sto:ControlLevel | ProductData
ISO_14306 | ISO 14306 | ISO 14306;JT file format | ISO | sto:ProductLifecycle | ProductData
QIF | QIF | QIF;Quality Information Framework | ISO | sto:ProductLifecycle | QualityManagement
ISO_15926 | ISO 15926 | ISO 15926;Process plant life-cycle data | ISO | rami:Information;sto:ProductionSystemLifecycle | ProductData
DEXPI | DEXPI | DEXPI;Data Exchange in the Process Industry | DIN | rami:Information | ProductData
ISO_8000 | ISO 8000 | ISO 8000;Data quality | ISO | rami:Information | QualityManagement
ISO_22745 | ISO 22745 | ISO 22745;Open technical dictionaries | ISO | rami:Information | Semantics
ISO_15704 | ISO 15704 | ISO 15704;Enterprise modelling requirements | ISO | rami:Business;sto:EnterpriseLevel | EnterpriseIntegration
ISO_19439 | ISO 19439 | ISO 19439;Enterprise modelling framework | ISO | rami:Business | EnterpriseIntegration
ISO_19440 | ISO 19440 | ISO 19440;Enterprise modelling constructs | ISO | rami:Business | EnterpriseIntegration
ISO_16100 | ISO 16100 | ISO 16100;Manufacturing software capability profiling | ISO | rami:Functional | EnterpriseIntegration
ISO_18629 | ISO 18629 | ISO 18629;Process Specification Language | ISO | rami:Information | Semantics
ISO_20140 | ISO 20140 | ISO 20140;Environmental performance evaluation | ISO | sto:EnergyEfficiencySubmodel | Energy
ISO_22400 | ISO 22400 | ISO 22400;Manufacturing operations KPIs | ISO | rami:Functional;sto:OperationsLevel | EnterpriseIntegration
ISO_23247 | ISO 23247 | ISO 23247;Digital twin framework for manufacturing | ISO | rami:Information | Engineering
ISO_9001 | ISO 9001 | ISO 9001;Quality management systems | ISO | rami:Business | QualityManagement
ISO_14001 | ISO 14001 | ISO 14001;Environmental management | ISO | rami:Business | Energy
ISO_50001 | ISO 50001 | ISO 50001;Energy management | ISO | rami:Business;sto:EnergyEfficiencySubmodel | Energy
ISO_55000 | ISO 55000 | ISO 55000;Asset management | ISO | rami:Business | ConditionMonitoring
ISO_13374 | ISO 13374 | ISO 13374;Condition monitoring data processing | ISO | rami:Functional | ConditionMonitoring
ISO_17359 | ISO 17359 | ISO 17359;Condition monitoring guidelines | ISO | rami:Functional | ConditionMonitoring
ISO_18435 | ISO 18435 | ISO 18435;Diagnostics and maintenance integration | ISO | rami:Functional | ConditionMonitoring
MIMOSA_OSA_CBM | MIMOSA OSA-CBM | MIMOSA OSA-CBM;Open System Architecture for Condition-Based Maintenance | MIMOSA | rami:Functional | ConditionMonitoring
MIMOSA_OSA_EAI | MIMOSA OSA-EAI | MIMOSA OSA-EAI;Open System Architecture for Enterprise Application Integration | MIMOSA | rami:Information | ConditionMonitoring
IEC_61508 | IEC 61508 | IEC 61508;Functional safety of E/E/PE systems | IEC | sto:SafetySubmodel | FunctionalSafety
IEC_61511 | IEC 61511 | IEC 61511;Safety instrumented systems | IEC | sto:SafetySubmodel | FunctionalSafety
IEC_62061 | IEC 62061 | IEC 62061;Safety of machinery control systems | IEC | sto:SafetySubmodel | FunctionalSafety
ISO_13849 | ISO 13849 | ISO 13849;Safety-related parts of control systems | ISO | sto:SafetySubmodel | FunctionalSafety
IEC_60204 | IEC 60204 | IEC 60204;Electrical equipment of machines | IEC | rami:Asset | FunctionalSafety
IEC_61800 | IEC 61800 | IEC 61800;Adjustable speed electrical power drive systems | IEC | rami:Asset | Automation
ISO_10218 | ISO 10218 | ISO 10218;Robot safety | ISO | rami:Asset;sto:SafetySubmodel | Robotics
ISO_TS_15066 | ISO/TS 15066 | ISO/TS 15066;Collaborative robots | ISO | rami:Asset | Robotics
ISO_9283 | ISO 9283 | ISO 9283;Robot performance criteria | ISO | rami:Asset | Robotics
ISO_8373 | ISO 8373 | ISO 8373;Robotics vocabulary | ISO | rami:Asset | Robotics
ISO_12100 | ISO 12100 | ISO 12100;Safety of machinery risk assessment | ISO | sto:SafetySubmodel | FunctionalSafety
IEC_62443 | IEC 62443 | IEC 62443;ISA-99 | IEC | sto:SecuritySubmodel;rami:Communication | Security
ISO_IEC_27001 | ISO/IEC 27001 | ISO/IEC 27001;Information security management | ISO_IEC_JTC1 | sto:SecuritySubmodel;rami:Business | Security
ISO_IEC_27002 | ISO/IEC 27002 | ISO/IEC 27002;Security controls | ISO_IEC_JTC1 | sto:SecuritySubmodel | Security
ISO_IEC_27019 | ISO/IEC 27019 | ISO/IEC 27019;Security for energy utilities | ISO_IEC_JTC1 | sto:SecuritySubmodel | Security
IEC_62351 | IEC 62351 | IEC 62351;Power systems data security | IEC | sto:SecuritySubmodel | Security
X_509 | X.509 | X.509;Public key certificates | IETF | sto:SecuritySubmodel | Security
OAuth_2_0 | OAuth 2.0 | OAuth 2.0;RFC 6749 | IETF | sto:SecuritySubmodel | Security
VDI_2182 | VDI 2182 | VDI 2182;IT security for industrial automation | VDI | sto:SecuritySubmodel | Security
IEC_61850 | IEC 61850 | IEC 61850;Substation automation | IEC | rami:Communication;rami:Information | Energy
IEC_61970 | IEC 61970 | IEC 61970;Common Information Model | IEC | rami:Information | Energy
IEC_61968 | IEC 61968 | IEC 61968;Distribution management | IEC | rami:Information | Energy
IEC_60870_5 | IEC 60870-5 | IEC 60870-5;Telecontrol | IEC | rami:Communication | Energy
IEC_62056 | IEC 62056 | IEC 62056;DLMS/COSEM | IEC | rami:Communication | Energy
IEC_61400_25 | IEC 61400-25 | IEC 61400-25;Wind power communication | IEC | rami:Communication | Energy
IEC_62746 | IEC 62746 | IEC 62746;Customer energy management | IEC | rami:Communication | Energy
OpenADR | OpenADR | OpenADR;Open Automated Demand Response | IEC | rami:Communication | Energy
BACnet | BACnet | BACnet;ISO 16484-5 | ASHRAE | rami:Communication | BuildingAutomation
KNX | KNX | KNX;ISO/IEC 14543-3 | KNX_Association | rami:Communication | BuildingAutomation
LonWorks | LonWorks | LonWorks;ISO/IEC 14908 | ISO_IEC_JTC1 | rami:Communication | BuildingAutomation
ISO_16484 | ISO 16484 | ISO 16484;Building automation and control systems | ISO | rami:Functional | BuildingAutomation
RFID_ISO_18000 | ISO/IEC 18000 | ISO/IEC 18000;RFID air interface | ISO_IEC_JTC1 | rami:Asset;sto:IdentificationSubmodel | Identification
ISO_IEC_15459 | ISO/IEC 15459 | ISO/IEC 15459;Unique identification | ISO_IEC_JTC1 | sto:IdentificationSubmodel | Identification
ISO_29005 | ISO 29005 | ISO 29005;Identification submodel | ISO | sto:IdentificationSubmodel | Identification
ISO_IEC_11179 | ISO/IEC 11179 | ISO/IEC 11179;Metadata registries | ISO_IEC_JTC1 | rami:Information | Semantics
GS1_EPC | EPC | EPC;Electronic Product Code | GS1 | sto:IdentificationSubmodel;sto:SupplyChainCycle | Identification
EPCIS | EPCIS | EPCIS;EPC Information Services | GS1 | rami:Business;sto:SupplyChainCycle | SupplyChain
GTIN | GTIN | GTIN;Global Trade Item Number | GS1 | sto:IdentificationSubmodel | Identification
ISO_IEC_15418 | ISO/IEC 15418 | ISO/IEC 15418;Data identifiers | ISO_IEC_JTC1 | sto:IdentificationSubmodel | Identification
ISO_IEC_16022 | ISO/IEC 16022 | ISO/IEC 16022;Data Matrix | ISO_IEC_JTC1 | sto:IdentificationSubmodel | Identification
ISO_IEC_18004 | ISO/IEC 18004 | ISO/IEC 18004;QR Code | ISO_IEC_JTC1 | sto:IdentificationSubmodel | Identification
ISO_IEC_20248 | ISO/IEC 20248 | ISO/IEC 20248;Digital signature meta structure | ISO_IEC_JTC1 | sto:IdentificationSubmodel | Identification
SCOR | SCOR | SCOR;Supply Chain Operations Reference | ASCM | rami:Business;sto:SupplyChainCycle | SupplyChain
EDIFACT | UN/EDIFACT | UN/EDIFACT;EDIFACT | ISO | rami:Business;sto:SupplyChainCycle | SupplyChain
ebXML | ebXML | ebXML;ISO 15000 | OASIS | rami:Business | SupplyChain
RosettaNet | RosettaNet | RosettaNet;RosettaNet PIP | GS1 | rami:Business | SupplyChain
BPMN | BPMN | BPMN;Business Process Model and Notation | OMG | rami:Business | EnterpriseIntegration
UML | UML | UML;Unified Modeling Language | OMG | rami:Information | Engineering
SysML | SysML | SysML;Systems Modeling Language | OMG | rami:Information;sto:ProductLifecycle | Engineering
XMI | XMI | XMI;XML Metadata Interchange | OMG | rami:Information | Engineering
Modelica | Modelica | Modelica;Modelica Language | ISO | rami:Information | Engineering
FMI | FMI | FMI;Functional Mock-up Interface | ISO | rami:Information;sto:ProductLifecycle | Engineering
XML | XML | XML;Extensible Markup Language | W3C | rami:Information | Semantics
JSON | JSON | JSON;RFC 8259 | IETF | rami:Information | Semantics
RDF | RDF | RDF;Resource Description Framework | W3C | rami:Information;sto:DistributedDataLevel | Semantics
OWL | OWL | OWL;Web Ontology Language | W3C | rami:Information | Semantics
SPARQL | SPARQL | SPARQL;SPARQL Query Language | W3C | rami:Information | Semantics
SSN | SSN | SSN;Semantic Sensor Network Ontology | W3C | rami:Information | Semantics
WoT_TD | WoT Thing Description | WoT Thing Description;Web of Things | W3C | rami:Information;sto:FrameworkLevel | IoT
SensorML | SensorML | SensorML;Sensor Model Language | OGC | rami:Information | IoT
OGC_SensorThings | OGC SensorThings API | OGC SensorThings API;SensorThings | OGC | rami:Communication;sto:FrameworkLevel | IoT
ISO_IEC_30141 | ISO/IEC 30141 | ISO/IEC 30141;IoT reference architecture | ISO_IEC_JTC1 | rami:Business | IoT
IIRA | IIRA | IIRA;Industrial Internet Reference Architecture | IIC | rami:Business | IoT
ISO_IEC_20924 | ISO/IEC 20924 | ISO/IEC 20924;IoT vocabulary | ISO_IEC_JTC1 | rami:Information | IoT
IEC_62591 | IEC 62591 | IEC 62591;WirelessHART standard | IEC | sto:LinkLevel | DeviceIntegration
IEC_62734 | IEC 62734 | IEC 62734;Wireless process automation | IEC | sto:LinkLevel | DeviceIntegration
IEC_62769 | IEC 62769 | IEC 62769;FDI standard | IEC | rami:Integration | DeviceIntegration
IEC_62453 | IEC 62453 | IEC 62453;FDT standard | IEC | rami:Integration | DeviceIntegration
IEC_62657 | IEC 62657 | IEC 62657;Industrial wireless coexistence | IEC | sto:PhysicalLevel | IndustrialNetworking
IEC_61918 | IEC 61918 | IEC 61918;Installation of communication networks | IEC | sto:PhysicalLevel | IndustrialNetworking
IEC_61076 | IEC 61076 | IEC 61076;Connectors | IEC | rami:Asset;sto:PhysicalLevel | IndustrialNetworking
IEC_60529 | IEC 60529 | IEC 60529;IP code | IEC | rami:Asset | Automation
IEC_61010 | IEC 61010 | IEC 61010;Safety of measurement equipment | IEC | rami:Asset | FunctionalSafety
IEC_62264_2 | IEC 62264-2 | IEC 62264-2;Object model attributes | IEC | rami:Information;sto:OperationsLevel | EnterpriseIntegration
IEC_62682 | IEC 62682 | IEC 62682;Alarm management for process industries | IEC | rami:Functional | Automation
IEC_81346 | IEC 81346 | IEC 81346;Reference designation system | IEC | sto:IdentificationSubmodel;sto:EngineeringSubmodel | Engineering
IEC_62026 | IEC 62026 | IEC 62026;Controller-device interfaces | IEC | rami:Integration | Automation
IEC_62337 | IEC 62337 | IEC 62337;Commissioning of electrical instrumentation | IEC | rami:Asset | Automation
IEC_62382 | IEC 62382 | IEC 62382;Loop check | IEC | rami:Asset | Automation
ISO_IEC_9075 | ISO/IEC 9075 | ISO/IEC 9075;SQL | ISO_IEC_JTC1 | rami:Information | Semantics
ISO_IEC_19505 | ISO/IEC 19505 | ISO/IEC 19505;UML ISO edition | ISO_IEC_JTC1 | rami:Information | Engineering
ISO_IEC_19510 | ISO/IEC 19510 | ISO/IEC 19510;BPMN ISO edition | ISO_IEC_JTC1 | rami:Business | EnterpriseIntegration
ISO_IEC_62264 | ISO/IEC 62264 | ISO/IEC 62264;Joint enterprise-control edition | ISO_IEC_JTC1 | rami:Functional | EnterpriseIntegration
ISO_16739 | ISO 16739 | ISO 16739;Industry Foundation Classes | ISO | rami:Information | Engineering
ISO_19650 | ISO 19650 | ISO 19650;Building information management | ISO | rami:Information | BuildingAutomation
ISO_IEC_25010 | ISO/IEC 25010 | ISO/IEC 25010;Software quality models | ISO_IEC_JTC1 | rami:Business | QualityManagement
ISO_IEC_12207 | ISO/IEC 12207 | ISO/IEC 12207;Software life cycle processes | ISO_IEC_JTC1 | sto:ProductLifecycle | Engineering
ISO_IEC_15288 | ISO/IEC 15288 | ISO/IEC 15288;System life cycle processes | ISO_IEC_JTC1 | sto:ProductLifecycle | Engineering
IEC_62304 | IEC 62304 | IEC 62304;Medical device software | IEC | sto:ProductLifecycle | QualityManagement
ISO_13485 | ISO 13485 | ISO 13485;Medical devices quality | ISO | rami:Business | QualityManagement
ISO_IEC_17025 | ISO/IEC 17025 | ISO/IEC 17025;Testing laboratories | ISO | rami:Business | QualityManagement
IEC_62402 | IEC 62402 | IEC 62402;Obsolescence management | IEC | sto:LifeCycleStatusSubmodel | Engineering
IEC_60050 | IEC 60050 | IEC 60050;International Electrotechnical Vocabulary | IEC | rami:Information | Semantics
IEC_61355 | IEC 61355 | IEC 61355;Document classification | IEC | sto:EngineeringSubmodel | Engineering
IEC_82045 | IEC 82045 | IEC 82045;Document management | IEC | sto:EngineeringSubmodel | Engineering
VDI_2770 | VDI 2770 | VDI 2770;Digital manufacturer information | VDI | sto:EngineeringSubmodel | Engineering
ZVEI_SG_I40 | ZVEI Industrie 4.0 component | ZVEI Industrie 4.0 component;I4.0 component | ZVEI | rami:Business | Engineering
VDMA_24582 | VDMA 24582 | VDMA 24582;Fieldbus neutral reference architecture | VDMA | rami:Communication | ConditionMonitoring
IEC_63278 | IEC 63278 | IEC 63278;Asset Administration Shell structure | IEC | sto:IdentificationSubmodel;rami:Information | Engineering
"""

# Explicit relations between standards (subject predicate object).
RELATIONS = """
OPC_UA isInteroperableWith AML
OPC_UA integratesWith IEC_61499
AML relatedTo IEC_62424
AML relatedTo COLLADA
AML relatedTo PLCopen_XML
IEC_62714 relatedTo eCl_ss
IEC_61131 relatedTo PLCopen_XML
IEC_61131_3 relatedTo PLCopen_Motion
IEC_61499 relatedTo IEC_61131
IEC_62541 relatedTo MQTT
IEC_62541 relatedTo TSN
IEC_62541 relatedTo ISA_95
IEC_62541 relatedTo MTConnect
IEC_62541 isInteroperableWith PackML
IEC_62541 relatedTo IEC_61850
IEC_62541 relatedTo FDI
IEC_62541 relatedTo IO_Link
IEC_62541 relatedTo ISO_20922
ISO_20922 relatedTo MQTT
MQTT relatedTo CoAP
MQTT relatedTo AMQP
AMQP relatedTo ISO_IEC_19464
DDS relatedTo DDSI_RTPS
CoAP relatedTo LwM2M
CoAP relatedTo 6LoWPAN
6LoWPAN relatedTo IEEE_802_15_4
Zigbee relatedTo IEEE_802_15_4
Thread relatedTo 6LoWPAN
TSN relatedTo IEEE_802_1Q
TSN relatedTo IEEE_1588
PROFINET relatedTo TSN
PROFINET integratesWith PROFIsafe
PROFINET integratesWith PROFIenergy
PROFIBUS relatedTo PROFINET
IEC_61158 relatedTo IEC_61784
IEC_61158 relatedTo PROFIBUS
IEC_61158 relatedTo EtherCAT
IEC_61158 relatedTo Foundation_Fieldbus
IEC_61784 relatedTo IEC_61784_3
EtherNet_IP relatedTo CIP
DeviceNet relatedTo CIP
CANopen relatedTo ISO_11898
IO_Link relatedTo IEC_61131_9
HART relatedTo WirelessHART
WirelessHART relatedTo IEC_62591
ISA100_11a relatedTo IEC_62734
FDI relatedTo IEC_61804
FDI relatedTo FDT
FDI relatedTo IEC_62769
FDT relatedTo IEC_62453
ISA_95 relatedTo B2MML
ISA_95 relatedTo IEC_62264
ISA_88 relatedTo BatchML
ISA_88 relatedTo IEC_61512
B2MML relatedTo BatchML
IEC_62264 relatedTo IEC_62264_2
ISO_10303 relatedTo ISO_10303_AP242
ISO_10303 relatedTo ISO_14649
ISO_10303 relatedTo ISO_15926
ISO_15926 relatedTo DEXPI
IEC_61360 relatedTo ISO_13584
IEC_61360 relatedTo IEC_61987
IEC_61508 relatedTo IEC_61511
IEC_61508 relatedTo IEC_62061
IEC_62061 relatedTo ISO_13849
IEC_62443 relatedTo ISO_IEC_27001
ISO_IEC_27001 relatedTo ISO_IEC_27002
IEC_61850 relatedTo IEC_61970
IEC_61970 relatedTo IEC_61968
IEC_61850 relatedTo IEC_62351
ISO_13374 relatedTo MIMOSA_OSA_CBM
ISO_13374 relatedTo ISO_17359
GS1_EPC relatedTo EPCIS
ISO_10218 relatedTo ISO_TS_15066
UML relatedTo SysML
UML relatedTo XMI
"""

ALIASES = [
    ("OPC UA", "IEC 62541"),
    ("AML", "IEC 62714"),
    ("ISA-95", "IEC 62264"),
    ("ISA-88", "IEC 61512"),
    ("IO-Link", "IEC 61131-9"),
    ("MQTT", "ISO/IEC 20922"),
    ("AMQP", "ISO/IEC 19464"),
    ("WirelessHART", "IEC 62591"),
    ("ISA100.11a", "IEC 62734"),
    ("FDI", "IEC 62769"),
    ("FDT", "IEC 62453"),
    ("UML", "ISO/IEC 19505"),
    ("BPMN", "ISO/IEC 19510"),
]

# extra properties collected from IEC and ISO publication pages
ANNOTATIONS = {
    "IEC_62541": {"committee": "IEC TC 65/SC 65E", "languages": ["en", "fr"], "stability": "2025", "issued": "2016"},
    "IEC_62714": {"committee": "IEC TC 65/SC 65E", "languages": ["en"], "stability": "2026", "issued": "2014"},
    "IEC_62264": {"committee": "IEC TC 65/SC 65E", "languages": ["en", "fr"], "stability": "2024", "issued": "2013"},
    "IEC_61512": {"committee": "IEC TC 65/SC 65A", "languages": ["en"], "stability": "2023", "issued": "2009"},
    "IEC_61131_9": {"committee": "IEC TC 65/SC 65B", "languages": ["en", "fr"], "stability": "2025", "issued": "2013"},
    "ISO_20922": {"committee": "ISO/IEC JTC 1", "languages": ["en"], "stability": "2025", "issued": "2016"},
    "IEC_61499": {"committee": "IEC TC 65/SC 65B", "languages": ["en", "fr"], "stability": "2025", "issued": "2012"},
    "IEC_61131": {"committee": "IEC TC 65/SC 65B", "languages": ["en", "fr"], "stability": "2026", "issued": "2003"},
    "IEC_62443": {"committee": "IEC TC 65", "languages": ["en"], "stability": "2024", "issued": "2009"},
}

LICENSED = {
    "OPC_UA": "GPLv2", "IEC_62541": "PaidSpecification", "AML": "RoyaltyFree", "MQTT": "RoyaltyFree",
    "CoAP": "RFCLicense", "HTTP": "RFCLicense", "XML": "W3CSoftwareLicense", "RDF": "W3CSoftwareLicense",
    "OWL": "W3CSoftwareLicense", "SPARQL": "W3CSoftwareLicense", "IEC_61131": "PaidSpecification",
    "ISO_10303": "PaidSpecification", "PackML": "RoyaltyFree", "MTConnect": "RoyaltyFree",
}

DEVELOPERS = {
    "OPC_UA": "OPC_Foundation", "IEC_62541": "OPC_Foundation", "AML": "AutomationML_eV",
    "IEC_62714": "AutomationML_eV", "MQTT": "OASIS", "PackML": "OMAC", "B2MML": "MESA",
    "ISA_95": "ISA", "IEC_62443": "ISA", "MTP": "ZVEI", "VDI_2193": "VDI",
}

# term definitions recorded per standard (homonym and synonym checks)
TERMS = [
    ("Resource_ISO_15704", "Resource", "ISO_15704",
     "Enterprise entity that supplies capabilities needed by enterprise or business processes."),
    ("Resource_ISO_10303", "Resource", "ISO_10303",
     "Something that may be used or consumed while carrying out an activity."),
    ("InternalElement_AML", "InternalElement", "AML",
     "CAEX element describing a concrete object instance in the plant hierarchy."),
    ("Object_OPC_UA", "Object", "OPC_UA",
     "Node class representing a physical or abstract element of the address space."),
    ("Asset_IEC_62890", "Asset", "IEC_62890", "Physical or logical object owned by or under custodial duties of an organization."),
    ("Component_IEC_81346", "Component", "IEC_81346", "Constituent part of a system, identified by reference designation."),
]

SYNONYMS = [("InternalElement", "Object")]
