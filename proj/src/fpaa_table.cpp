// Generated by tools/fpaa_phases.py; do not edit by hand.
// Phase-flat sequences for delta = 1/sqrt(2), kept only where they beat every shorter one.

#include "bbsp/fpaa.hpp"

namespace bbsp::detail {

const std::vector<TabulatedSequence>& coherent_fpaa_table() {
    static const std::vector<TabulatedSequence> table = {
        {3, 1.349750e-01, {-0.69710051122868855, 0.41602167624966668, 0.41602135287517328}},
        {5, 6.361822e-03, {-3.0856683133073659e-06, -0.34369618204761476, -0.74374831162608146, -2.3978398316727443, -2.7978980671631852}},
        {7, 2.723193e-03, {0.73061842822598688, -0.2410533839619764, -1.5839256872697787, -1.4990464658664031, -0.090913465248302572, -1.1412135511050656, -2.4603711860542972}},
        {9, 1.481764e-04, {0, -2.8629238924831988, -1.9421135302523032, -2.5731332098374913, 0.50711953432600465, -0.50711953432600465, 2.5731332098374917, 1.9421135302523034, 2.8629238924831988}},
        {11, 6.840060e-05, {-0.79694055200731562, -2.9595172108245364, -1.6686705965826016, -2.5319371468065173, 1.5373566619791381, 1.8289099195125971, 0.041696690366383127, -2.0336612977385782, 2.018587716337219, 1.7835826592556643, 2.7806614526108531}},
        {13, 3.716011e-06, {-0.0005135862409231251, 0.22445403503594319, 1.3063169471895861, -2.5723245270051214, -2.1359453939711948, -2.54020702076871, 0.38741421542550425, -0.38696574062500488, 2.5403516499123269, 2.1362163717132034, 2.5721868744755332, -1.3063620537812213, -0.22462189584442172}},
        {15, 3.708230e-06, {-0.38637993761192746, 0.0052174340347082016, 0.30109244876094587, 0.21469391044169139, 1.3135876003207141, -2.5825515153376459, -2.1157274729907365, -2.5492392520152483, 0.42886555332784893, -0.3504479571434187, 2.5287263825130051, 2.1533108862727977, 2.562664213283373, -1.2940109369160555, -0.2297981731138683}},
        {17, 9.693119e-08, {0, 0.18683970170343711, 1.3615495511567008, 0.50814070452640303, 1.1430982091081994, -2.4565238018394329, -2.2593051715971821, -2.5578616572623782, 0.31409773789892848, -0.31409773789892848, 2.5578616572623787, 2.2593051715971821, 2.4565238018394329, -1.1430982091081996, -0.50814070452640303, -1.3615495511567004, -0.18683970170343711}},
        {21, 2.588890e-09, {0, 0.19225271993407267, 1.4996987634475714, 0.66688327332490704, 2.0341698399442247, -0.32730553926081773, -0.52367299647966181, -2.0064955797203989, -2.1561535608107714, -2.5206327949585581, 0.29622566525627247, -0.29622566525627247, 2.5206327949585585, 2.1561535608107718, 2.0064955797203989, 0.52367299647966181, 0.32730553926081773, -2.0341698399442247, -0.66688327332490704, -1.4996987634475714, -0.19225271993407267}},
        {23, 2.588642e-09, {0, -2.8605313580811202, 1.1646805010488572, -1.0588188593378218, -2.3410970189324076, -0.14304132681536297, -0.52382121174624263, -1.9374713490980577, 2.0808255888280378, 0.40560220926748469, 0.63774958837680185, 6.6909620510813284e-08, -6.6909620510813284e-08, -0.63774958837680185, -0.40560220926748469, -2.0808255888280374, 1.9374713490980575, 0.52382121174624263, 0.14304132681536297, 2.3410970189324072, 1.0588188593378218, -1.164680501048857, 2.8605313580811202}},
        {25, 7.023582e-11, {0, 0.2088639215145105, 1.6222948530207919, 0.83025223797723857, 2.2572974440143643, -1.2513711403787777, 0.11143608387848136, 0.59581749186762245, -0.70174005969169695, -1.6962226255877582, -2.044209002397801, -2.4756385178446552, 0.29373006431219739, -0.29373006431219739, 2.4756385178446552, 2.0442090023978015, 1.6962226255877582, 0.70174005969169695, -0.59581749186762245, -0.11143608387848136, 1.2513711403787777, -2.2572974440143643, -0.83025223797723857, -1.6222948530207923, -0.2088639215145105}},
        {27, 7.023104e-11, {1.4781056822954497e-08, 0.20886379189297566, 1.6222947377246655, 0.8302517519253314, 2.2572973016172071, -1.2513708780337702, 0.11143591702259803, 0.59581762234938296, -0.70173970314266487, -1.6962231051749779, -2.0442093193254451, -2.47563875065276, 0.29372999524904486, -0.29372999969690161, 2.4756387303495204, 2.0442093030871735, 1.6962230637883797, 0.70173966995006154, -0.5958176026741957, -0.11143592147730974, 1.2513708797902483, -2.2572972611255029, -0.83025198230712194, 6.2992153271324014e-08, 2.5567009354077186e-07, -1.622294790028608, -0.20886378455060362}},
        {29, 1.929275e-12, {2.2931878618237533e-11, 0.22997551365967039, 1.7261499229384825, 0.98221133766237756, 2.3441691879377418, -1.6156523704153944, 0.71950896426925048, -0.064974042842661284, -0.45893005564000688, 0.74981112978096665, -0.87413686582101446, -1.4950207907861897, -1.9388088713223379, -2.4300981099421421, 0.29719165762178168, -0.29719165762173949, 2.4300981098665986, 1.938808871277752, 1.4950207908217843, 0.87413686580924477, -0.74981112977578945, 0.458930055640006, 0.064974042843459756, -0.71950896427455069, 1.6156523704352779, -2.3441691879629047, -0.98221133768549196, -1.7261499228741337, -0.22997551362296909}},
    };
    return table;
}

}  // namespace bbsp::detail
