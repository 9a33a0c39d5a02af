"""Reference optima frozen by scripts/generate_optima.py. Do not edit."""

REFERENCE = {'A.01': {'f': 0.038279975378067724,
          'provenance': 'oracle-corrected',
          'x': [[3.0252928730158626, 0.47366168105943407]]},
 'A.02': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.03': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.04': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.05': {'f': 0.39788735772973816,
          'provenance': 'paper-claimed',
          'x': [[-3.1415926535998695, 11.12750000001852],
                [3.1415926535900436, 1.1275000000044835],
                [3.1415926535897327, 1.1274999999994244]]},
 'A.06': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[1.0, 1.0, 1.0, 1.0]]},
 'A.07': {'f': 1.1636087806752896e-15,
          'provenance': 'paper-claimed',
          'x': [[1.9999999989143566,
                 1.0000000002102944,
                 0.7071067793504178,
                 0.5946035534109536,
                 0.5452538611127775,
                 0.522136886424126,
                 0.510948569102442,
                 0.5054446387239236,
                 0.5027149481198173,
                 0.5013556362779255,
                 0.5006773594929558,
                 0.500338565457476,
                 0.5001692545932127,
                 0.5000846200262968,
                 0.5000423084523895,
                 0.5000211541186805,
                 0.5000105768226465,
                 0.5000052889125963,
                 0.5000026443500946,
                 0.500001322437813,
                 0.500000661394857,
                 0.5000003310095713,
                 0.5000001655084071,
                 0.500000082742515,
                 0.5000000415164001]]},
 'A.08': {'f': -1003.8731854599861,
          'provenance': 'oracle-corrected',
          'x': [[5.0, -0.9169529239884691]]},
 'A.09': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.10': {'f': 0.0,
          'provenance': 'paper-claimed',
          'x': [[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0]]},
 'A.11': {'f': 0.0,
          'provenance': 'paper-claimed',
          'x': [[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]]},
 'A.12': {'f': 4.583044648338058e-14,
          'provenance': 'paper-claimed',
          'x': [[2.9999993785735835, 1.9986650593128192, 1.0000015617422133, 2.0013341710420636]]},
 'A.13': {'f': 0.0,
          'provenance': 'paper-claimed',
          'x': [[0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0]]},
 'A.14': {'f': 0.0,
          'provenance': 'paper-claimed',
          'x': [[0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0]]},
 'A.15': {'f': -210.0,
          'provenance': 'paper-claimed',
          'x': [[10.0, 18.0, 24.0, 28.0, 30.0, 30.0, 28.0, 24.0, 18.0, 10.0]]},
 'A.16': {'f': 0.0,
          'provenance': 'paper-claimed',
          'x': [[0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0]]},
 'A.17': {'f': -37.432558069123445,
          'provenance': 'oracle-corrected',
          'x': [[-3.234920811044487, 12.543934804283477]]},
 'A.18': {'f': 4.440892098500626e-16,
          'provenance': 'paper-claimed',
          'x': [[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]]},
 'A.19': {'f': -200.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.20': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.21': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[1.0, 3.0]]},
 'A.22': {'f': 0.0,
          'provenance': 'paper-claimed',
          'x': [[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]]},
 'A.23': {'f': 4.5629166311352736e-23,
          'provenance': 'paper-claimed',
          'x': [[1.0000000000011722, 1.0000000000028513]]},
 'A.24': {'f': -1.0,
          'provenance': 'oracle-corrected',
          'x': [[0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0,
                 0.0]]},
 'A.25': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[5.0, 4.0]]},
 'A.26': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 1.0, 1.0, 1.0]]},
 'A.27': {'f': -3873.7241821862704,
          'provenance': 'paper-claimed',
          'x': [[0.19388017278895303, 0.4851339091269232]]},
 'A.28': {'f': 0.0, 'provenance': 'paper-claimed', 'x': [[0.0, 0.0]]},
 'A.29': {'f': -2.47475368753169e+18,
          'provenance': 'oracle-corrected',
          'x': [[-500.0, 184.659603027115]]},
 'A.30': {'f': 19.105879794567986,
          'provenance': 'oracle-corrected',
          'x': [[5.146896749559558, 6.839589743760438]]},
 'B.01': {'f': -15.0,
          'provenance': 'paper-claimed',
          'x': [[1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 3.0, 3.0, 1.0]]},
 'B.02': {'f': -0.803619, 'provenance': 'best-known', 'x': None},
 'B.03': {'f': -1.0000000000000009,
          'provenance': 'paper-claimed',
          'x': [[0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794,
                 0.31622776601683794]]},
 'B.04': {'f': -30665.538637203503,
          'provenance': 'paper-claimed',
          'x': [[78.0000001900072,
                 33.000000007015345,
                 29.995256111723535,
                 44.9999997214167,
                 36.7758128137204]]},
 'B.05': {'f': 5126.4981095952735,
          'provenance': 'paper-claimed',
          'x': [[679.9453198291692, 1026.067132634018, 0.11887636450882058, -0.39623355319574954]]},
 'B.06': {'f': -6961.813875580154,
          'provenance': 'paper-claimed',
          'x': [[14.095000000000027, 0.8429607892154658]]},
 'B.07': {'f': 24.306209068118317,
          'provenance': 'paper-claimed',
          'x': [[2.1719963740612935,
                 2.363682957358394,
                 8.77392571740676,
                 5.095984394604861,
                 0.9906547478496235,
                 1.4305739466911123,
                 1.3216442188398898,
                 9.828725819278569,
                 8.280091489812552,
                 8.375926185644994]]},
 'B.08': {'f': -0.09582504141803579,
          'provenance': 'paper-claimed',
          'x': [[1.2279713538317154, 4.245373366947751]]},
 'B.09': {'f': 680.6300573476888,
          'provenance': 'paper-claimed',
          'x': [[2.330499039629758,
                 1.951372417251307,
                 -0.47754137747343944,
                 4.365726189852952,
                 -0.6244868325499308,
                 1.038130719099651,
                 1.594226172918647]]},
 'B.10': {'f': 7049.248020528661,
          'provenance': 'paper-claimed',
          'x': [[579.306685331482,
                 1359.970673231013,
                 5109.9706619661665,
                 182.01769965679878,
                 295.60117352135325,
                 217.98230034320122,
                 286.41652613544557,
                 395.60117352135325]]},
 'B.11': {'f': 0.7500000000000001,
          'provenance': 'paper-claimed',
          'x': [[0.7071067811865476, 0.5], [-0.7071067811865476, 0.5]]},
 'B.12': {'f': 0.05394984777027195,
          'provenance': 'paper-claimed',
          'x': [[-1.7171435703330449,
                 1.5957096901125263,
                 1.827245753041164,
                 -0.7636430780995698,
                 -0.76364307828233]]},
 'B.13': {'f': 128.0, 'provenance': 'paper-claimed', 'x': [[4.0, 4.0]]},
 'B.14': {'f': 2.0, 'provenance': 'paper-claimed', 'x': [[1.0, 2.0, 0.0]]},
 'B.15': {'f': -99.44199589280942,
          'provenance': 'oracle-corrected',
          'x': [[-3.794733204780303, -1.897366589889682, 10.0]]},
 'B.16': {'f': -1.7320508075688772,
          'provenance': 'paper-claimed',
          'x': [[0.0, 1.7320508075688772]]},
 'B.17': {'f': 0.04, 'provenance': 'paper-claimed', 'x': [[-1.0, 1.0, 0.0]]},
 'B.18': {'f': -17.0, 'provenance': 'paper-claimed', 'x': [[1.0, 1.0, 0.0, 1.0, 0.0]]},
 'B.19': {'f': -213.0, 'provenance': 'paper-claimed', 'x': [[0.0, 1.0, 0.0, 1.0, 1.0, 20.0]]},
 'B.20': {'f': -194.0,
          'provenance': 'paper-claimed',
          'x': [[1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 3.0, 3.0]]},
 'B.21': {'f': -0.375,
          'provenance': 'paper-claimed',
          'x': [[0.0, 0.0, 0.0, 0.25, 0.25, 0.25, 0.25, 0.0, 0.0, 0.0]]},
 'B.22': {'f': -310.0, 'provenance': 'paper-claimed', 'x': [[5.0, 1.0, 5.0, 0.0, 5.0, 10.0]]},
 'B.23': {'f': -6.0000000049999995,
          'provenance': 'oracle-corrected',
          'x': [[2.0, 0.0, 2.0000000049999995]]},
 'B.24': {'f': -16.73889318439464,
          'provenance': 'paper-claimed',
          'x': [[0.717536196282178, 1.469842082252837]]},
 'B.25': {'f': -5.508013271595294,
          'provenance': 'paper-claimed',
          'x': [[2.329520197477607, 3.1784930741176867]]},
 'B.26': {'f': 10122.49323817033,
          'provenance': 'paper-claimed',
          'x': [[78.00000000020134,
                 33.00000000001346,
                 29.995740025355303,
                 45.0,
                 36.77532709344955]]},
 'B.27': {'f': -83.24972840617797,
          'provenance': 'paper-claimed',
          'x': [[88.35590927552555, 7.672653131609199, 1.3178621356463287]]},
 'B.28': {'f': -5.739820303895506,
          'provenance': 'paper-claimed',
          'x': [[8.130072144119357, 0.6153662466509008, 0.5640437646334464, 5.636208213815708]]},
 'B.29': {'f': -6.048232940770713,
          'provenance': 'paper-claimed',
          'x': [[6.46479239733674,
                 0.6674068920842873,
                 1.0130603367111224,
                 5.932730084815882,
                 2.2327888320341693,
                 0.5957650021273057,
                 0.40060282844571554,
                 5.527281904988848]]},
 'B.30': {'f': 0.029310830720944616,
          'provenance': 'paper-claimed',
          'x': [[1.1166347524968767,
                 1.2204408250296435,
                 1.5377853881019679,
                 1.9727701995764668,
                 1.791095965379775]]}}
