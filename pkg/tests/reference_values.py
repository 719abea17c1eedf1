"""Published 40-decimal truncations used as fixed targets."""

GAMMA_40 = {
    (1, 1): "0.5772156649015328606065120900824024310421",
    (2, 1): "1.2703628454614781700237442115405789991176",
    (3, 1): "1.0990495258666765304844653683056101172687",
    (3, 2): "0.0274722833689111758196693402380551660971",
    (4, 1): "0.9867225683134286288516284852662000680853",
    (4, 3): "0.2836402771480495411721157262743789310323",
    (5, 1): "0.6085239515392424720797932587242977844852",
    (5, 2): "-0.3521515687273009496616629364632317829793",
    (5, 3): "-0.0277297956309668265257700614505971705577",
    (5, 4): "0.7509325558290832583643416625784805099754",
    (6, 1): "1.0990495258666765304844653683056101172687",
    (6, 5): "0.7206194639288564852369014616962317341726",
    (7, 1): "0.5248150406924973562625223411495332899061",
    (7, 2): "-0.2056054381568892464534786985665633480791",
    (7, 3): "-0.2073792262044870176749633279895819980539",
    (7, 4): "0.3941362902986424958694917738809493398481",
    (7, 5): "0.0022039624971495809805463316453851114840",
    (7, 6): "0.3933633939505052424732857938698766575430",
    (8, 1): "0.8549354647727692335433587204524500649277",
    (8, 3): "-0.0798291608610312540562783915706500134207",
    (8, 5): "0.1317871035406593953082697648137500031576",
    (8, 7): "0.3634694380090807952283941178450289444530",
    (9, 1): "0.4583934116751448870734014321701224566066",
    (9, 2): "-0.4390916249874335517722607230338446356563",
    (9, 4): "0.3766435697722607485013387886351423981437",
    (9, 5): "0.0310377589755237254080223102800284801451",
    (9, 7): "0.2640125444192708949097251475003452625184",
    (9, 8): "0.4355261493808210021839077529918713216083",
    (12, 1): "0.7804452516800748221781507487840850259477",
    (12, 5): "0.2062773166333538066734777364821150421376",
    (12, 7): "0.3186042741866017083063146195215250913210",
    (12, 11): "0.5143421472955026785634237252141166920349",
}

GAMMA_K_Q7 = "1.957156454449714752713821861425456626477"  # 39 decimals available
BETA0 = "0.2015440949047104252985132669867998104016"
GAMMA_M = "0.4218587490880596232477371177014182248836"
BETA0_PRIME = "0.3023161423570656379477699004801997156024"
GAMMA_N = "-0.3148924434522646725458956058346642466619"
SHANKS_C1 = "0.581948659"
